"""Group structure: products, inverses, powers, and the relators.

Multiplication composes reduced tree pair diagrams through their common
refinement; the result is canonical, so equality of elements is plain
structural equality. The defining relations of both presentations hold
on the nose.
"""

from thompsonf import (
    commutator,
    commutator_is_trivial,
    element_of_word,
    generator,
    inverse,
    multiply,
    parse_word,
    power,
    verify_relators,
)


def el(text):
    return element_of_word(parse_word(text))


x0, x1 = generator(0), generator(1)

# the infinite presentation's relation, as a computation
conjugated = multiply(multiply(inverse(x0), x1), x0)
print("x0^-1 x1 x0 ==", conjugated.normal_form(), "| equals x2:", conjugated == generator(2))

# both finite-presentation relators sweep to the identity
for other in (el("x0^-1 x1 x0"), el("x0^-2 x1 x0^2")):
    print("commutator with x0 x1^-1 trivial:", commutator(el("x0 x1^-1"), other).is_identity)

# the full relator report covers every relation with indices up to 9
report = verify_relators()
print("relator report:", "PASS" if report.passed else report.failures,
      f"({len(report.entries)} relations)")

# powers of x0 x1^-1 follow a clean pattern: caret count k + 2
z = el("x0 x1^-1")
print("\n k | caret count | normal form")
for k in range(1, 8):
    g = power(z, k)
    print(f"{k:>2} | {g.caret_count:>11} | {g}")

# the group is far from abelian, but disjointly supported elements commute
print("\n[x0, x1] trivial:", commutator_is_trivial(x0, x1))
print("[x2, (x0 x1^-1)^5] trivial:", commutator_is_trivial(generator(2), power(z, 5)))
