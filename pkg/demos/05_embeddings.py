"""Shift maps, clone subgroups, and embedded product groups.

Grafting both trees of an element at a binary address clones it into
the subtree living on the corresponding dyadic interval. Clones at
prefix-incomparable addresses have disjoint supports, so they commute,
and that is all it takes to embed F x Z and F^m x Z^n inside the group.
"""

import random

from thompsonf import (
    address_interval,
    clone_map,
    commutator_is_trivial,
    element_of_word,
    embed_f_z,
    embed_product,
    generator,
    is_prefix_free,
    multiply,
    parse_word,
    power,
    right_subtree_claims,
    right_subtree_of_root_empty,
    shift,
    z_generator,
)
from thompsonf.metric import random_element


def el(text):
    return element_of_word(parse_word(text))


# the shift map raises every generator index: clone along address "1"
print("shift(x0)  =", shift(generator(0), 1))
print("shift^2(x0) =", shift(generator(0), 2), " shift^2(x1) =", shift(generator(1), 2))

# addresses name dyadic intervals; prefix-free means disjoint
for address in ("", "0", "11", "101"):
    lo, hi = address_interval(address)
    print(f"interval of {address!r:>6}: [{lo}, {hi})")
print("prefix-free ('0','10','11'):", is_prefix_free(("0", "10", "11")))

# disjoint supports commute
rng = random.Random(0)
a = clone_map("0", random_element(rng, 6))
b = clone_map("11", random_element(rng, 6))
print("clones at '0' and '11' commute:", commutator_is_trivial(a, b))

# the F x Z embedding: w goes below address "11", the integer becomes a
# power of x0 x1^-1; caret counts add with a constant overlap of 2
w = el("x1 x0^-1 x1")
for t in (1, 3, 8):
    image = embed_f_z(w, t)
    print(f"N(image({t})) = {image.caret_count} = N(w) + t + 2 =",
          w.caret_count + t + 2)

# powers of x0 x1^-1 vanish on the interval [3/4, 1): both trees of the
# image have an empty right subtree under the right child of the root
g = power(el("x0 x1^-1"), 4)
print("\n(x0 x1^-1)^4 right-child right subtree empty:",
      g.pair.pos.right.right.is_leaf and g.pair.neg.right.right.is_leaf)

# normal forms alone predict when the root's own right subtree is bare
h = el("x0^2 x1")
claims = right_subtree_claims(h.normal_form())
print("claims for x0^2 x1:", claims,
      "| tree agrees:", right_subtree_of_root_empty(h.pair.pos))

# the product embedding: two group factors and two commuting integers
image = embed_product(("00", "01", "1"), (el("x0"), el("x1 x0")), (2, -1))
print("\nF^2 x Z^2 image normal form:", image.normal_form())
print("z generators commute:",
      commutator_is_trivial(z_generator(0), z_generator(1)))
print("factor images commute:",
      multiply(clone_map("00", el("x0")), clone_map("01", el("x1 x0")))
      == multiply(clone_map("01", el("x1 x0")), clone_map("00", el("x0"))))
