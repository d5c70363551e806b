"""Branch-word encodings of subgroups generated by two Dehn twists.

A proper non-cyclic subgroup generated by two positive Dehn twists is
free of rank two, and its coset graph is a pseudo-tree: two monogons
joined by a segment carrying a sequence of up/down branches.  We store
only the branch word (serialized over 'u'/'d'); an upward branch
contributes an L and a downward branch an R to the word A in the
monodromy at infinity L.L.A.L.L.At.

The marked variant records which of the (at most two) strong classes of
2-factorizations the marking's base edge selects: "left" for the first
canonical class, "right" for the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagrams import word_transpose
from .errors import DomainError
from .factorization import canonical_2factorizations, decide_strong_equivalence, pair, strong_class_labels
from .psl2 import GroupElement, TwistVector, classify, dehn_twist, evaluate

__all__ = [
    "PseudoTree",
    "MarkedPseudoTree",
    "FULL_GROUP",
    "CYCLIC",
    "monodromy_at_infinity",
    "from_twists",
    "isomorphic",
    "is_even_tree",
]

_BRANCH_TO_LETTER = str.maketrans("ud", "LR")
_LETTER_TO_BRANCH = str.maketrans("LR", "ud")
_BRANCH_FLIP = str.maketrans("ud", "du")


@dataclass(frozen=True)
class PseudoTree:
    """Branch directions along the segment joining the two monogons."""

    branches: str = ""

    def __post_init__(self):
        if set(self.branches) - {"u", "d"}:
            raise DomainError(f"branches must use letters u/d: {self.branches!r}")

    def transposed(self) -> "PseudoTree":
        """The tree read from the other monogon: reversed with u <-> d."""
        return PseudoTree(self.branches[::-1].translate(_BRANCH_FLIP))


@dataclass(frozen=True)
class MarkedPseudoTree:
    tree: PseudoTree
    marking: str  # "left" | "right"

    def __post_init__(self):
        if self.marking not in ("left", "right"):
            raise DomainError(f"marking must be left or right: {self.marking!r}")


FULL_GROUP = "full_group"
CYCLIC = "cyclic"


def monodromy_at_infinity(tree: PseudoTree) -> GroupElement:
    """Evaluate L.L.A.L.L.At for the tree's branch word A (u -> L, d -> R)."""
    a_word = tree.branches.translate(_BRANCH_TO_LETTER)
    return evaluate("LL" + a_word + "LL" + word_transpose(a_word))


def from_twists(
    u: TwistVector | tuple[int, int], v: TwistVector | tuple[int, int]
) -> Union[str, MarkedPseudoTree]:
    """The subgroup generated by two twists: FULL_GROUP, CYCLIC, or its tree.

    The two twists generate the whole group iff the vectors span (wedge
    product +-1) and a cyclic group iff they are parallel; otherwise the
    subgroup is free on the twists and the marked pseudo-tree is recovered
    from the strong class of the pair (t_u, t_v).
    """
    if not isinstance(u, TwistVector):
        u = TwistVector(*u)
    if not isinstance(v, TwistVector):
        v = TwistVector(*v)
    wedge = u.p * v.q - u.q * v.p
    if abs(wedge) == 1:
        return FULL_GROUP
    if wedge == 0:
        return CYCLIC
    fact = pair(dehn_twist(u), dehn_twist(v))
    g = fact.product
    cls = classify(g)
    assert cls.kind == "hyperbolic" or (cls.kind == "parabolic" and cls.index == -4)
    matches = [
        (i, label)
        for i, (canonical, label) in enumerate(
            zip(canonical_2factorizations(g), strong_class_labels(g))
        )
        if decide_strong_equivalence(fact, canonical)
    ]
    assert len(matches) == 1, "pair matches a unique strong class"
    idx, label = matches[0]
    word = cls.diagram_word
    rotated = word[label.anchor :] + word[: label.anchor]
    k = (len(word) - 4) // 2
    a_word = rotated[2 : 2 + k]
    tree = PseudoTree(a_word.translate(_LETTER_TO_BRANCH))
    return MarkedPseudoTree(tree, "left" if idx == 0 else "right")


def isomorphic(
    t1: Union[PseudoTree, MarkedPseudoTree], t2: Union[PseudoTree, MarkedPseudoTree]
) -> bool:
    """Tree isomorphism: branch words equal or transposed; markings must agree."""
    if isinstance(t1, MarkedPseudoTree) != isinstance(t2, MarkedPseudoTree):
        raise DomainError("cannot compare a marked tree with an unmarked one")
    if isinstance(t1, MarkedPseudoTree):
        if t1.marking != t2.marking:
            return False
        t1, t2 = t1.tree, t2.tree
    return t1 == t2 or t1 == t2.transposed()


def is_even_tree(tree: PseudoTree) -> bool:
    """True iff the up/down branches come in adjacent equal pairs."""
    runs = []
    for ch in tree.branches:
        if runs and runs[-1][0] == ch:
            runs[-1][1] += 1
        else:
            runs.append([ch, 1])
    return all(count % 2 == 0 for _, count in runs)
