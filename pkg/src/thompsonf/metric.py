"""Caret-count metric estimates, an exact word-metric oracle, and the
distortion measurement harness.

The caret count N(g) of the reduced pair pins the word length of any
non-identity element between N(g) - 2 and 4 N(g) - 4. Exact lengths come
from breadth-first search over the Cayley graph on x0, x1 and inverses,
with canonical reduced pairs as hash keys; the search radius is capped
(default 9) to keep runs at desk scale.

The distortion sweep samples random product-group elements, embeds them,
and records the caret-count bounds of the image next to the product norm
of the input. Product norms use the caret-count lower bound for each
group factor and |t| for each integer factor, which reproduces the
embedding's inequality chain with exact integer arithmetic. Affine fits
of the recorded bounds are computed in exact rational arithmetic, so the
slope assertions carry no floating point tolerance.

CSV output (bit-exact header)::

    m,n,addresses,input_norm,caret_count,lower,upper,exact

with an empty ``exact`` field when the image lies outside the oracle
ball. Row order follows the sample index; runs are reproducible from the
seed.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .embeddings import embed_f_z, embed_product
from .group import GroupElement, generator, identity, inverse, multiply
from .trees import LEAF, Tree, TreePair, caret

DEFAULT_RADIUS_CAP = 9


def caret_count_of(g: GroupElement) -> int:
    """N(g), the caret count of either tree of the reduced pair."""
    return g.caret_count


def length_bounds(g: GroupElement) -> tuple[int, int]:
    """(N - 2, 4N - 4) word-length bounds; (0, 0) for the identity.

    The bounds only carry meaning for non-identity elements; the identity
    answer is a flagged placeholder, not an estimate.
    """
    if g.is_identity:
        return (0, 0)
    n = g.caret_count
    return (n - 2, 4 * n - 4)


@dataclass(frozen=True)
class MetricEstimate:
    """Caret count with its word-length bracket and optional exact length."""

    caret_count: int
    lower: int
    upper: int
    exact: int | None = None

    def __post_init__(self):
        if self.exact is not None and self.caret_count > 0:
            if not self.lower <= self.exact <= self.upper:
                raise ValueError("exact length escapes the caret-count bracket")


class WordMetricOracle:
    """Breadth-first exact word metric on the generators x0, x1.

    Levels are grown on demand and cached, so repeated queries share one
    search. Ball contents are independent of the generator expansion
    order; the cap bounds memory and runtime.
    """

    def __init__(self, cap: int = DEFAULT_RADIUS_CAP,
                 generators: Sequence[GroupElement] | None = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        if generators is None:
            x0, x1 = generator(0), generator(1)
            generators = (x0, inverse(x0), x1, inverse(x1))
        self._gens = tuple(generators)
        self._lengths: dict[GroupElement, int] = {identity(): 0}
        self._frontier: list[GroupElement] = [identity()]
        self._radius = 0

    def _check_radius(self, radius: int) -> None:
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        if radius > self.cap:
            raise ValueError(f"radius {radius} exceeds the oracle cap {self.cap}")

    def _grow_to(self, radius: int) -> None:
        self._check_radius(radius)
        while self._radius < radius:
            nxt: list[GroupElement] = []
            depth = self._radius + 1
            for g in self._frontier:
                for h in self._gens:
                    p = multiply(g, h)
                    if p not in self._lengths:
                        self._lengths[p] = depth
                        nxt.append(p)
            self._frontier = nxt
            self._radius = depth

    def ball(self, radius: int) -> dict[GroupElement, int]:
        """Every element with word length <= radius, mapped to its length."""
        self._grow_to(radius)
        return {g: l for g, l in self._lengths.items() if l <= radius}

    def sphere_sizes(self, radius: int) -> list[int]:
        """Element counts at each exact length 0..radius."""
        self._grow_to(radius)
        counts = [0] * (radius + 1)
        for l in self._lengths.values():
            if l <= radius:
                counts[l] += 1
        return counts

    def exact_length(self, g: GroupElement, max_radius: int | None = None) -> int | None:
        """|g| if it is at most max_radius (default: the cap), else None."""
        radius = self.cap if max_radius is None else max_radius
        self._check_radius(radius)
        known = self._lengths.get(g)
        if known is not None:
            return known if known <= radius else None
        self._grow_to(radius)
        known = self._lengths.get(g)
        return known if known is not None and known <= radius else None


_default_oracle: WordMetricOracle | None = None


def default_oracle() -> WordMetricOracle:
    global _default_oracle
    if _default_oracle is None:
        _default_oracle = WordMetricOracle()
    return _default_oracle


def exact_length(g: GroupElement, max_radius: int,
                 oracle: WordMetricOracle | None = None) -> int | None:
    oracle = oracle or default_oracle()
    return oracle.exact_length(g, max_radius)


def enumerate_ball(radius: int,
                   oracle: WordMetricOracle | None = None) -> dict[GroupElement, int]:
    oracle = oracle or default_oracle()
    return oracle.ball(radius)


@dataclass(frozen=True)
class BoundsReport:
    """Result of checking N - 2 <= |g| <= 4N - 4 over a whole ball."""

    radius: int
    checked: int
    violations: tuple[tuple[str, int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_bounds_on_ball(radius: int,
                         oracle: WordMetricOracle | None = None) -> BoundsReport:
    """Assert the two-sided caret bounds for every non-identity ball element."""
    oracle = oracle or default_oracle()
    violations: list[tuple[str, int, int]] = []
    checked = 0
    for g, length in oracle.ball(radius).items():
        if length == 0:
            continue
        checked += 1
        lower, upper = length_bounds(g)
        if not lower <= length <= upper:
            violations.append((str(g.normal_form()), g.caret_count, length))
    return BoundsReport(radius, checked, tuple(violations))


def metric_estimate(g: GroupElement, oracle: WordMetricOracle | None = None,
                    search_radius: int | None = None) -> MetricEstimate:
    """Bundle N(g) with its bracket; look up the exact length when asked."""
    lower, upper = length_bounds(g)
    exact: int | None = 0 if g.is_identity else None
    if exact is None and search_radius is not None:
        exact = (oracle or default_oracle()).exact_length(g, search_radius)
    return MetricEstimate(g.caret_count, lower, upper, exact)


# --- random element sampler -------------------------------------------

def random_tree(rng: random.Random, carets: int) -> Tree:
    """Random tree shape with the given caret count (not uniform, just varied)."""
    if carets == 0:
        return LEAF
    left = rng.randrange(carets)
    return caret(random_tree(rng, left), random_tree(rng, carets - 1 - left))


def random_element(rng: random.Random, max_carets: int,
                   nontrivial: bool = False) -> GroupElement:
    """Random element from a random same-size tree pair, reduced.

    With ``nontrivial`` the identity is resampled away, which the
    distortion sweep uses to keep every factor active.
    """
    while True:
        carets = rng.randint(1, max_carets)
        g = GroupElement.from_pair(
            TreePair(random_tree(rng, carets), random_tree(rng, carets))
        )
        if not nontrivial or not g.is_identity:
            return g


# --- distortion sweep ---------------------------------------------------

@dataclass(frozen=True)
class EmbeddingSpec:
    """Which embedding to sweep: the F x Z map or a product embedding."""

    kind: str                     # "phi" (F x Z) or "psi" (F^m x Z^n)
    addresses: tuple[str, ...]
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in ("phi", "psi"):
            raise ValueError("embedding kind must be 'phi' or 'psi'")
        if self.kind == "phi" and (self.m, self.n) != (1, 1):
            raise ValueError("the F x Z embedding has m = n = 1")
        if self.kind == "psi" and len(self.addresses) != self.m + 1:
            raise ValueError("product embedding needs m+1 addresses")
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")


def f_z_spec() -> EmbeddingSpec:
    return EmbeddingSpec("phi", ("11",), 1, 1)


def product_spec(addresses: Sequence[str], n: int) -> EmbeddingSpec:
    addresses = tuple(addresses)
    return EmbeddingSpec("psi", addresses, len(addresses) - 1, n)


@dataclass(frozen=True)
class DistortionSample:
    """One sampled input with the metric estimate of its embedded image.

    ``input_norm`` is the product norm: the sum over group factors of the
    caret-count lower bound max(N - 2, 0) plus the sum of |t| over the
    integer factors.
    """

    m: int
    n: int
    addresses: tuple[str, ...]
    input_norm: int
    image: MetricEstimate


def distortion_sweep(spec: EmbeddingSpec, samples: int, seed: int = 0,
                     max_carets: int = 12, max_z: int = 12,
                     oracle: WordMetricOracle | None = None,
                     search_radius: int | None = None) -> list[DistortionSample]:
    """Sample random product elements, embed them, and record both norms."""
    rng = random.Random(seed)
    out: list[DistortionSample] = []
    for _ in range(samples):
        ws = [random_element(rng, max_carets, nontrivial=True)
              for _ in range(spec.m)]
        ts = [rng.choice((-1, 1)) * rng.randint(1, max_z) for _ in range(spec.n)]
        if spec.kind == "phi":
            image = embed_f_z(ws[0], ts[0])
        else:
            image = embed_product(spec.addresses, ws, ts)
        norm = sum(max(w.caret_count - 2, 0) for w in ws) + sum(abs(t) for t in ts)
        estimate = metric_estimate(image, oracle=oracle, search_radius=search_radius)
        out.append(DistortionSample(spec.m, spec.n, spec.addresses, norm, estimate))
    return out


CSV_HEADER = ("m", "n", "addresses", "input_norm",
              "caret_count", "lower", "upper", "exact")


def sweep_to_csv(samples: Iterable[DistortionSample], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in samples:
        writer.writerow([
            s.m,
            s.n,
            ",".join(s.addresses),
            s.input_norm,
            s.image.caret_count,
            s.image.lower,
            s.image.upper,
            "" if s.image.exact is None else s.image.exact,
        ])


# --- exact affine fits ---------------------------------------------------

def affine_fit(points: Sequence[tuple[int, int]]) -> tuple[Fraction, Fraction]:
    """Least-squares line through integer points, in exact rationals."""
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points to fit a line")
    sx = sum(x for x, _ in points)
    sy = sum(y for _, y in points)
    sxx = sum(x * x for x, _ in points)
    sxy = sum(x * y for x, y in points)
    denominator = n * sxx - sx * sx
    if denominator == 0:
        raise ValueError("degenerate fit: all x values coincide")
    slope = Fraction(n * sxy - sx * sy, denominator)
    intercept = Fraction(sy, n) - slope * Fraction(sx, n)
    return slope, intercept


@dataclass(frozen=True)
class EnvelopeFit:
    """Least-squares slope with the intercept shifted to bound all points."""

    slope: Fraction
    ls_intercept: Fraction
    envelope_intercept: Fraction


def envelope_fit(points: Sequence[tuple[int, int]], side: str) -> EnvelopeFit:
    """Fit a line and shift it to an upper or lower envelope of the points."""
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    slope, intercept = affine_fit(points)
    residuals = [Fraction(y) - slope * x for x, y in points]
    shifted = max(residuals) if side == "upper" else min(residuals)
    return EnvelopeFit(slope, intercept, shifted)


def distortion_envelopes(
    samples: Sequence[DistortionSample],
) -> tuple[EnvelopeFit, EnvelopeFit]:
    """(upper, lower) envelopes of the image bounds against the input norm."""
    upper_points = [(s.input_norm, s.image.upper) for s in samples]
    lower_points = [(s.input_norm, s.image.lower) for s in samples]
    return (envelope_fit(upper_points, "upper"),
            envelope_fit(lower_points, "lower"))
