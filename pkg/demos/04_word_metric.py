"""The word metric: exact lengths by search, caret-count bounds.

The caret count N(g) of the reduced pair brackets the word length of a
non-identity element: N - 2 <= |g| <= 4N - 4. The oracle computes exact
lengths by breadth-first search over the Cayley graph on x0, x1 and
their inverses, which is feasible out to radius 9 at desk scale.
"""

import time

from thompsonf import (
    WordMetricOracle,
    check_bounds_on_ball,
    element_of_word,
    generator,
    length_bounds,
    parse_word,
)

oracle = WordMetricOracle()

print("radius | sphere | ball")
start = time.time()
spheres = oracle.sphere_sizes(7)
total = 0
for radius, count in enumerate(spheres):
    total += count
    print(f"{radius:>6} | {count:>6} | {total}")
print(f"(built in {time.time() - start:.2f}s)")

# exact length versus the caret-count bracket
print("\nelement          N   bracket     exact")
for text in ("x0", "x1", "x0^-1 x1 x0", "x0 x1^-1 x0 x1", "x1 x1 x0^-1"):
    g = element_of_word(parse_word(text))
    lower, upper = length_bounds(g)
    exact = oracle.exact_length(g)
    print(f"{text:<15} {g.caret_count:>2}   ({lower:>2}, {upper:>2})   {exact}")

# x2 needs three letters even though it is a generator of the
# infinite presentation: the search confirms no shorter spelling
print("\n|x2| =", oracle.exact_length(generator(2), 3))

# every element of the radius-6 ball respects the bounds
report = check_bounds_on_ball(6, oracle)
print(f"\nbounds on the radius-6 ball: checked {report.checked}, "
      f"violations {len(report.violations)}")
