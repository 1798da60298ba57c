"""Rooted binary trees and reduced tree pair diagrams.

A tree is either a leaf or a caret carrying a left and a right subtree.
Exposed leaves are numbered 0..L-1 from left to right, and a tree with C
carets has exactly C+1 leaves. A pair of trees with equal leaf counts
represents a group element; the pair is *reduced* when there is no index
m such that both trees contain a caret whose two leaves are exposed and
numbered m and m+1. Every element has a unique reduced pair, which is the
canonical representative used throughout the package.

All values here are immutable and hashable, so reduced pairs can serve
directly as dictionary keys (the word-metric oracle depends on this).
Every operation is a pure function; nothing needs synchronization.

Text format (bit-exact): ``tree ::= "L" | "(" tree " " tree ")"`` and a
pair serializes as ``"negtree | postree"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class ParseError(ValueError):
    """Malformed text input; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class Tree:
    """Immutable rooted binary tree node.

    ``Tree()`` is a leaf; ``Tree(left, right)`` is a caret. Structural
    equality and a hash cached at construction make trees cheap dict keys.
    """

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: Tree | None = None, right: Tree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a caret needs exactly two children")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if left is None:
            object.__setattr__(self, "_hash", hash(("tree-leaf",)))
        else:
            object.__setattr__(self, "_hash", hash((left._hash, right._hash)))

    def __setattr__(self, name, value):
        raise AttributeError("Tree values are immutable")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self._hash != other._hash:
            return False
        if self.is_leaf or other.is_leaf:
            return self.is_leaf and other.is_leaf
        return self.left == other.left and self.right == other.right

    def __repr__(self) -> str:
        return f"Tree[{format_tree(self)}]"


LEAF = Tree()


def caret(left: Tree, right: Tree) -> Tree:
    """Build the caret with the given subtrees."""
    return Tree(left, right)


def leaf_count(t: Tree) -> int:
    """Number of exposed leaves, always caret_count(t) + 1."""
    if t.is_leaf:
        return 1
    return leaf_count(t.left) + leaf_count(t.right)


def caret_count(t: Tree) -> int:
    """Number of internal nodes."""
    if t.is_leaf:
        return 0
    return 1 + caret_count(t.left) + caret_count(t.right)


def leaf_addresses(t: Tree) -> tuple[str, ...]:
    """Addresses of the exposed leaves in leaf order (0 = left, 1 = right)."""
    out: list[str] = []

    def walk(node: Tree, addr: str) -> None:
        if node.is_leaf:
            out.append(addr)
            return
        walk(node.left, addr + "0")
        walk(node.right, addr + "1")

    walk(t, "")
    return tuple(out)


def leaf_exponents(t: Tree) -> tuple[int, ...]:
    """Exponent E(n) of every leaf, in leaf order.

    E(n) is the length of the maximal ascending path of left edges
    starting at leaf n that does not reach the right side of the tree,
    where the right side is the maximal path of right edges from the root
    and includes the root itself. Right leaves always get 0, and the
    all-right comb has all exponents 0.
    """
    out: list[int] = []

    def walk(node: Tree, zeros: int, ones_prefix: bool) -> None:
        # zeros: trailing run of left edges in the current address;
        # ones_prefix: whether the address above that run lies on the right side
        if node.is_leaf:
            if zeros == 0:
                out.append(0)
            else:
                out.append(zeros - 1 if ones_prefix else zeros)
            return
        walk(node.left, zeros + 1, ones_prefix)
        walk(node.right, 0, ones_prefix and zeros == 0)

    walk(t, 0, True)
    return tuple(out)


def leaf_exponent(t: Tree, n: int) -> int:
    """E(n) for a single leaf; raises IndexError outside 0..L-1."""
    exps = leaf_exponents(t)
    if not 0 <= n < len(exps):
        raise IndexError(f"leaf index {n} out of range for {len(exps)} leaves")
    return exps[n]


def _segments(vec: Sequence[int]) -> list[list[int]]:
    """Split a spine vector into blocks with sum(block) == len(block) - 1.

    Each block is the interior exponent vector of one subtree hanging off
    the right side; the first-passage split is forced, so the
    decomposition is unique when it exists.
    """
    segs: list[list[int]] = []
    cur: list[int] = []
    f = 0
    for e in vec:
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        cur.append(e)
        f += e - 1
        if f == -1:
            segs.append(cur)
            cur, f = [], 0
    if cur:
        raise ValueError("exponent vector does not close into subtrees")
    return segs


def _tree_from_interior(seg: Sequence[int]) -> Tree:
    if len(seg) == 1:
        if seg[0] != 0:
            raise ValueError("invalid interior exponent vector")
        return LEAF
    if seg[0] < 1:
        raise ValueError("invalid interior exponent vector")
    rest = [seg[0] - 1, *seg[1:]]
    f = 0
    for k, e in enumerate(rest):
        f += e - 1
        if f == -1:
            return caret(_tree_from_interior(rest[: k + 1]),
                         _tree_from_interior(list(seg[k + 1:])))
    raise ValueError("invalid interior exponent vector")


def tree_from_exponents(vec: Sequence[int]) -> Tree:
    """Inverse of leaf_exponents for a full exponent vector.

    The vector must list one entry per leaf; the last entry is always 0
    because the rightmost leaf sits on the right side.
    """
    vec = list(vec)
    if not vec:
        raise ValueError("exponent vector must have at least one entry")
    if vec[-1] != 0:
        raise ValueError("rightmost leaf always has exponent 0")
    t = LEAF
    for seg in reversed(_segments(vec[:-1])):
        t = caret(_tree_from_interior(seg), t)
    return t


@dataclass(frozen=True)
class TreePair:
    """Ordered pair (negative tree, positive tree) with equal leaf counts."""

    neg: Tree
    pos: Tree

    def __post_init__(self):
        if leaf_count(self.neg) != leaf_count(self.pos):
            raise ValueError("tree pair sides must have equal leaf counts")

    def __repr__(self) -> str:
        return f"TreePair[{format_pair(self)}]"


IDENTITY_PAIR = TreePair(LEAF, LEAF)


def exposed_caret_positions(t: Tree) -> set[int]:
    """Leaf numbers m such that some caret has exposed leaves m and m+1."""
    out: set[int] = set()

    def walk(node: Tree, offset: int) -> int:
        if node.is_leaf:
            return 1
        nl = walk(node.left, offset)
        nr = walk(node.right, offset + nl)
        if node.left.is_leaf and node.right.is_leaf:
            out.add(offset)
        return nl + nr

    walk(t, 0)
    return out


def _remove_exposed_caret(node: Tree, m: int, offset: int = 0) -> Tree:
    # caller guarantees m is an exposed caret position of the tree
    if node.left.is_leaf and node.right.is_leaf and offset == m:
        return LEAF
    nl = leaf_count(node.left)
    if m + 1 <= offset + nl - 1:
        return caret(_remove_exposed_caret(node.left, m, offset), node.right)
    return caret(node.left, _remove_exposed_caret(node.right, m, offset + nl))


def is_reduced(pair: TreePair) -> bool:
    """True when no caret with exposed leaves (m, m+1) occurs in both trees."""
    return not (exposed_caret_positions(pair.neg) & exposed_caret_positions(pair.pos))


def reduce_pair(pair: TreePair) -> TreePair:
    """Canonical form: repeatedly cancel common exposed carets, lowest m first.

    Idempotent, and confluent: the result does not depend on the removal
    order, so the lowest-m policy is only there for determinism.
    """
    neg, pos = pair.neg, pair.pos
    while True:
        common = exposed_caret_positions(neg) & exposed_caret_positions(pos)
        if not common:
            return TreePair(neg, pos)
        m = min(common)
        neg = _remove_exposed_caret(neg, m)
        pos = _remove_exposed_caret(pos, m)


def validate_address(address: str) -> str:
    """Check a node address: a finite string over {0, 1}; empty = root."""
    if any(ch not in "01" for ch in address):
        raise ValueError(f"address must consist of 0s and 1s, got {address!r}")
    return address


def subtree_at(t: Tree, address: str) -> Tree:
    """Subtree rooted at the addressed node; errors if the path leaves the tree."""
    validate_address(address)
    node = t
    for depth, bit in enumerate(address):
        if node.is_leaf:
            raise ValueError(f"address {address!r} walks off a leaf at depth {depth}")
        node = node.left if bit == "0" else node.right
    return node


def graft_at(inner: Tree, address: str) -> Tree:
    """Hang ``inner`` at ``address`` below a fresh spine of |address| carets.

    Off-path positions get bare leaves, so the caret count grows by
    exactly len(address).
    """
    validate_address(address)
    t = inner
    for bit in reversed(address):
        t = caret(t, LEAF) if bit == "0" else caret(LEAF, t)
    return t


def right_subtree_of_root_empty(t: Tree) -> bool:
    """True iff the right child of the root caret is a bare leaf."""
    if t.is_leaf:
        raise ValueError("tree has no root caret")
    return t.right.is_leaf


# --- common refinement helpers (used by group multiplication) ---

def union_tree(a: Tree, b: Tree) -> Tree:
    """Smallest tree containing both arguments as prefixes."""
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return caret(union_tree(a.left, b.left), union_tree(a.right, b.right))


def leaf_growths(base: Tree, refined: Tree) -> list[Tree]:
    """Per-leaf subtrees of ``refined`` below the leaves of ``base``.

    ``refined`` must contain ``base``; the result, fed to expand_leaves,
    carries a refinement of one side of a pair over to the other side.
    """
    out: list[Tree] = []

    def walk(x: Tree, r: Tree) -> None:
        if x.is_leaf:
            out.append(r)
            return
        if r.is_leaf:
            raise ValueError("refined tree does not contain the base tree")
        walk(x.left, r.left)
        walk(x.right, r.right)

    walk(base, refined)
    return out


def expand_leaves(t: Tree, growths: Sequence[Tree]) -> Tree:
    """Replace leaf n of ``t`` by growths[n]."""
    it = iter(growths)

    def walk(node: Tree) -> Tree:
        if node.is_leaf:
            return next(it)
        return caret(walk(node.left), walk(node.right))

    try:
        new = walk(t)
    except StopIteration:
        raise ValueError("fewer growths than leaves") from None
    if next(it, None) is not None:
        raise ValueError("more growths than leaves")
    return new


# --- text and DOT serialization ---

def format_tree(t: Tree) -> str:
    if t.is_leaf:
        return "L"
    return f"({format_tree(t.left)} {format_tree(t.right)})"


def format_pair(pair: TreePair) -> str:
    return f"{format_tree(pair.neg)} | {format_tree(pair.pos)}"


def parse_tree(text: str) -> Tree:
    tree, pos = _parse_tree_at(text, 0)
    if pos != len(text):
        raise ParseError("trailing input after tree", pos)
    return tree


def _parse_tree_at(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text):
        raise ParseError("unexpected end of input", pos)
    ch = text[pos]
    if ch == "L":
        return LEAF, pos + 1
    if ch != "(":
        raise ParseError("expected 'L' or '('", pos)
    left, pos = _parse_tree_at(text, pos + 1)
    if pos >= len(text) or text[pos] != " ":
        raise ParseError("expected ' ' between subtrees", pos)
    right, pos = _parse_tree_at(text, pos + 1)
    if pos >= len(text) or text[pos] != ")":
        raise ParseError("expected ')'", pos)
    return caret(left, right), pos + 1


def parse_pair(text: str) -> TreePair:
    sep = text.find(" | ")
    if sep < 0:
        raise ParseError("expected ' | ' between the two trees", len(text))
    return TreePair(parse_tree(text[:sep]), parse_tree(text[sep + 3:]))


def tree_to_dot(t: Tree, name: str) -> str:
    """DOT digraph with nodes labeled by address; leaves also carry leaf numbers."""
    lines = [f"digraph {name} {{"]
    leaf_no = 0

    def walk(node: Tree, addr: str) -> None:
        nonlocal leaf_no
        disp = addr or "root"
        if node.is_leaf:
            lines.append(f'  "n{addr}" [label="{disp} #{leaf_no}"];')
            leaf_no += 1
            return
        lines.append(f'  "n{addr}" [label="{disp}"];')
        walk(node.left, addr + "0")
        walk(node.right, addr + "1")
        lines.append(f'  "n{addr}" -> "n{addr}0";')
        lines.append(f'  "n{addr}" -> "n{addr}1";')

    walk(t, "")
    lines.append("}")
    return "\n".join(lines)


def pair_to_dot(pair: TreePair) -> str:
    """Two digraphs named neg and pos, one per side of the pair."""
    return tree_to_dot(pair.neg, "neg") + "\n" + tree_to_dot(pair.pos, "pos")
