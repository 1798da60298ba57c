"""Words over the generators, unique normal forms, and the bijection with
reduced tree pair diagrams.

The group carries an infinite presentation with generators x_k (k >= 0)
and relations x_i^-1 x_j x_i = x_{j+1} for i < j. Every element has a
unique normal form

    x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1}

with all exponents positive, indices strictly increasing within each
part, and the uniqueness condition: whenever some index i occurs in both
parts, index i+1 occurs in at least one part.

Normal forms correspond bijectively to reduced tree pairs through leaf
exponents: leaf n of the positive tree carries the exponent of x_n in
the positive part, leaf n of the negative tree the exponent in the
negative part.

Word grammar (bit-exact): ``word ::= "" | term (" " term)*`` with
``term ::= "x" digits ("^" signed-integer)?``. Exponent 0 drops the
term; negative exponents expand to repeated inverse letters.

``rewrite_to_normal_form`` computes normal forms purely by string
rewriting and serves as an oracle independent of the tree route used by
the group module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .trees import (
    ParseError,
    TreePair,
    is_reduced,
    leaf_exponents,
    tree_from_exponents,
)


@dataclass(frozen=True)
class Letter:
    """One generator letter x_index^sign with sign +1 or -1."""

    index: int
    sign: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("generator index must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign == 1 else f"x{self.index}^-1"


Word = tuple[Letter, ...]


def x(index: int) -> Letter:
    return Letter(index, 1)


def xinv(index: int) -> Letter:
    return Letter(index, -1)


def word_inverse(word: Sequence[Letter]) -> Word:
    return tuple(l.inverse for l in reversed(word))


def is_finite_alphabet(word: Iterable[Letter]) -> bool:
    """True when the word only uses x0 and x1."""
    return all(l.index <= 1 for l in word)


_TERM_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse the word grammar; raises ParseError with the bad position."""
    letters: list[Letter] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos] == " ":
            pos += 1
            continue
        start = pos
        while pos < n and text[pos] != " ":
            pos += 1
        token = text[start:pos]
        m = _TERM_RE.fullmatch(token)
        if m is None:
            raise ParseError(f"bad term {token!r}", start)
        index = int(m.group(1))
        exponent = 1 if m.group(2) is None else int(m.group(2))
        sign = 1 if exponent >= 0 else -1
        letters.extend(Letter(index, sign) for _ in range(abs(exponent)))
    return tuple(letters)


def format_word(word: Sequence[Letter]) -> str:
    """Emit the word grammar, grouping adjacent runs of the same letter."""
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        e = (j - i) * word[i].sign
        parts.append(f"x{word[i].index}" if e == 1 else f"x{word[i].index}^{e}")
        i = j
    return " ".join(parts)


@dataclass(frozen=True)
class NormalForm:
    """Unique normal form, stored as (index, exponent) runs.

    Both parts keep strictly increasing indices and positive exponents;
    the negative part is emitted in decreasing index order, matching the
    written form x_{jl}^{-sl} ... x_{j1}^{-s1}.
    """

    positive: tuple[tuple[int, int], ...] = ()
    negative: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for part in (self.positive, self.negative):
            prev = -1
            for index, exponent in part:
                if index < 0:
                    raise ValueError("negative generator index")
                if exponent <= 0:
                    raise ValueError("normal form exponents must be positive")
                if index <= prev:
                    raise ValueError("indices must be strictly increasing")
                prev = index
        pos_idx = {i for i, _ in self.positive}
        neg_idx = {j for j, _ in self.negative}
        for i in pos_idx & neg_idx:
            if i + 1 not in pos_idx and i + 1 not in neg_idx:
                raise ValueError(
                    f"uniqueness condition violated at index {i}: "
                    f"x{i} occurs in both parts but x{i + 1} in neither"
                )

    @property
    def is_identity(self) -> bool:
        return not self.positive and not self.negative

    def word(self) -> Word:
        letters = [Letter(i, 1) for i, r in self.positive for _ in range(r)]
        letters += [Letter(j, -1) for j, s in reversed(self.negative) for _ in range(s)]
        return tuple(letters)

    def shift(self, k: int) -> NormalForm:
        """Raise every index by k; the image of the k-fold shift map."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        return NormalForm(
            tuple((i + k, r) for i, r in self.positive),
            tuple((j + k, s) for j, s in self.negative),
        )

    def __str__(self) -> str:
        parts = [f"x{i}" if r == 1 else f"x{i}^{r}" for i, r in self.positive]
        parts += [f"x{j}^{-s}" for j, s in reversed(self.negative)]
        return " ".join(parts)


def _compress(vec: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple((i, e) for i, e in enumerate(vec) if e)


def tree_pair_to_normal_form(pair: TreePair) -> NormalForm:
    """Read the normal form off a reduced pair via leaf exponents."""
    if not is_reduced(pair):
        raise ValueError("tree pair must be reduced")
    return NormalForm(
        _compress(leaf_exponents(pair.pos)),
        _compress(leaf_exponents(pair.neg)),
    )


def _spine_slots(exps: dict[int, int]) -> int:
    """Minimal number of non-final leaves closing the exponent vector."""
    if not exps:
        return 0
    last = max(exps)
    i = 0
    f = 0
    while True:
        f += exps.get(i, 0) - 1
        if f == -1:
            if i >= last:
                return i + 1
            f = 0
        i += 1


def normal_form_to_tree_pair(nf: NormalForm) -> TreePair:
    """Build the unique reduced pair realizing the normal form.

    Each side is decoded from its exponent vector; the shorter side is
    padded with bottom-right carets (exponent 0 slots) until the leaf
    counts agree. The construction is validated by re-reading exponents.
    """
    pos_exps, neg_exps = dict(nf.positive), dict(nf.negative)
    slots = max(_spine_slots(pos_exps), _spine_slots(neg_exps))
    pos_vec = [pos_exps.get(i, 0) for i in range(slots)] + [0]
    neg_vec = [neg_exps.get(i, 0) for i in range(slots)] + [0]
    pair = TreePair(tree_from_exponents(neg_vec), tree_from_exponents(pos_vec))
    assert tree_pair_to_normal_form(pair) == nf, "exponent re-read mismatch"
    return pair


# --- rewriting oracle -------------------------------------------------

_REWRITE_STEP_CAP = 200_000


def _semi_normalize(letters: list[Letter]) -> None:
    """Push positive letters left and sort both parts, in place.

    Rules, applied leftmost-first until none fires:
      * free cancellation of adjacent x_k^e x_k^-e;
      * x_a^-1 x_b -> x_{b+1} x_a^-1 (a < b) or x_b x_{a+1}^-1 (a > b);
      * x_a x_b -> x_b x_{a+1} for positive letters with a > b;
      * x_a^-1 x_b^-1 -> x_{b+1}^-1 x_a^-1 for a < b.

    Terminates: each rule drops the word length, then the count of
    negative-before-positive pairs, then a lexicographic index measure.
    """
    steps = 0
    i = 0
    while i < len(letters) - 1:
        a, b = letters[i], letters[i + 1]
        if a.index == b.index and a.sign == -b.sign:
            del letters[i:i + 2]
        elif a.sign == -1 and b.sign == 1:
            if a.index < b.index:
                letters[i:i + 2] = [Letter(b.index + 1, 1), a]
            else:
                letters[i:i + 2] = [Letter(b.index, 1), Letter(a.index + 1, -1)]
        elif a.sign == 1 and b.sign == 1 and a.index > b.index:
            letters[i:i + 2] = [b, Letter(a.index + 1, 1)]
        elif a.sign == -1 and b.sign == -1 and a.index < b.index:
            letters[i:i + 2] = [Letter(b.index + 1, -1), a]
        else:
            i += 1
            continue
        i = max(i - 1, 0)
        steps += 1
        if steps > _REWRITE_STEP_CAP:
            raise RuntimeError("rewriting step cap exceeded")


def _blocks(indices: Sequence[int]) -> list[list[int]]:
    """Group a sorted index sequence into [index, count] runs."""
    out: list[list[int]] = []
    for idx in indices:
        if out and out[-1][0] == idx:
            out[-1][1] += 1
        else:
            if out and out[-1][0] > idx:
                raise AssertionError("semi-normal part is not sorted")
            out.append([idx, 1])
    return out


def _drop_one_and_shift(blocks: list[list[int]], i: int) -> list[list[int]]:
    # remove one letter of index i; everything above (all >= i+2) shifts down
    out: list[list[int]] = []
    for idx, cnt in blocks:
        if idx == i:
            if cnt > 1:
                out.append([idx, cnt - 1])
        elif idx > i:
            out.append([idx - 1, cnt])
        else:
            out.append([idx, cnt])
    return out


def rewrite_to_normal_form(word: Sequence[Letter]) -> NormalForm:
    """Normal form computed purely by string rewriting.

    After semi-normalization the uniqueness condition is enforced by the
    reverse substitution: when index i occurs in both parts and neither
    x_{i+1} nor x_{i+1}^-1 occurs, the innermost x_i ... x_i^-1 pair is
    removed and every index beyond i+1 shifts down by one. Each such move
    shortens the word, so the loop terminates.
    """
    letters = list(word)
    _semi_normalize(letters)
    split = next((k for k, l in enumerate(letters) if l.sign < 0), len(letters))
    pos = _blocks([l.index for l in letters[:split]])
    neg = _blocks([l.index for l in reversed(letters[split:])])
    while True:
        pos_idx = {i for i, _ in pos}
        neg_idx = {j for j, _ in neg}
        bad = sorted(
            i for i in pos_idx & neg_idx
            if i + 1 not in pos_idx and i + 1 not in neg_idx
        )
        if not bad:
            break
        pos = _drop_one_and_shift(pos, bad[0])
        neg = _drop_one_and_shift(neg, bad[0])
    return NormalForm(
        tuple((i, c) for i, c in pos),
        tuple((j, c) for j, c in neg),
    )
