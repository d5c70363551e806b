"""Dehn-twist factorizations, Hurwitz moves and 2-factorization classes.

A 2-factorization of g is an ordered pair of positive Dehn twists whose
product is g.  Strong equivalence is generated by the single Hurwitz move
(m1, m2) -> (m1 m2 m1^-1, m1); weak equivalence allows an additional
global conjugation.  Since the braid group on two strands is infinite
cyclic, the strong orbit of a pair is the bi-infinite sequence of
iterated Hurwitz moves, and the square of the move acts by conjugation by
the product; this makes strong equivalence decidable by a bounded walk.

Existence and the count of strong classes are governed by the
para-symmetries of the cyclic diagram: an element is 2-factorizable iff
it is conjugate to X, to R^2, or presents as L.L.A.L.L.At, and each
presentation yields the explicit pair

    L.L.A.L.L.At = (X L^-1 X^-1) * ((Y A X) L^-1 (Y A X)^-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .diagrams import (
    CyclicDiagram,
    axis_word,
    para_symmetries,
    reflection_symmetries,
    word_transpose,
)
from .errors import DomainError
from .psl2 import (
    IDENTITY,
    L,
    R,
    X,
    Y,
    ConjugacyClass,
    GroupElement,
    TwistVector,
    classify,
    conjugator_to_rep,
    cutting_conjugator,
    dehn_twist,
    evaluate,
    primitive_root,
    twist_vector,
)

__all__ = [
    "Factorization",
    "StrongClassLabel",
    "FactorizationRealityReport",
    "pair",
    "hurwitz_move",
    "exists_2factorization",
    "canonical_2factorizations",
    "strong_class_labels",
    "count_classes",
    "decide_strong_equivalence",
    "decide_weak_equivalence",
    "factorization_reality",
    "oracle_products",
]


@dataclass(frozen=True)
class Factorization:
    """An ordered sequence of positive Dehn twists."""

    factors: tuple[GroupElement, ...]

    def __post_init__(self):
        for f in self.factors:
            if twist_vector(f) is None:
                raise DomainError(f"factor {f} is not a positive Dehn twist")

    @property
    def product(self) -> GroupElement:
        result = IDENTITY
        for f in self.factors:
            result = result * f
        return result

    @property
    def vectors(self) -> tuple[TwistVector, ...]:
        return tuple(twist_vector(f) for f in self.factors)

    def __len__(self):
        return len(self.factors)

    def conjugated_by(self, h: GroupElement) -> "Factorization":
        return Factorization(tuple(f.conjugated_by(h) for f in self.factors))

    @property
    def max_entry(self) -> int:
        return max(f.max_entry for f in self.factors)


def pair(m1: GroupElement, m2: GroupElement) -> Factorization:
    return Factorization((m1, m2))


def hurwitz_move(f: Factorization, i: int, direction: int = 1) -> Factorization:
    """Hurwitz move at 1-based position i (direction -1 is the inverse move)."""
    if not 1 <= i < len(f):
        raise DomainError(f"move index {i} out of range for length {len(f)}")
    factors = list(f.factors)
    a, b = factors[i - 1], factors[i]
    if direction >= 0:
        factors[i - 1], factors[i] = a * b * a.inverse(), a
    else:
        factors[i - 1], factors[i] = b, b.inverse() * a * b
    return Factorization(tuple(factors))


def _class_diagram(cls: ConjugacyClass) -> Optional[CyclicDiagram]:
    word = cls.diagram_word
    return CyclicDiagram(word) if word else None


def exists_2factorization(g: GroupElement) -> bool:
    """True iff g is a product of two positive Dehn twists."""
    cls = classify(g)
    if cls.kind == "elliptic_order3_pos":
        return True
    if cls.kind == "parabolic" and cls.index == 2:
        return True
    if cls.kind == "parabolic" and cls.index < 0 or cls.kind == "hyperbolic":
        return bool(para_symmetries(_class_diagram(cls)))
    return False


@dataclass(frozen=True)
class StrongClassLabel:
    """Label of a strong equivalence class of 2-factorizations.

    kind "full_group" is the class of (R, L^-1) with elliptic product;
    "equal_twists" the class of (R, R); "axis" carries the para-symmetry
    axis on the canonical diagram together with the anchor offset at which
    the presentation L.L.A.L.L.At is read.
    """

    kind: str
    axis: Optional[int] = None
    anchor: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "axis":
            return f"axis(c={self.axis}, anchor={self.anchor})"
        return self.kind


def _axis_factorizations(g: GroupElement):
    """Per-axis canonical pairs for parabolic-negative / hyperbolic g."""
    h, canon = cutting_conjugator(g)
    diagram = CyclicDiagram(canon)
    assert diagram.letters == canon
    out = []
    for sym in para_symmetries(diagram):
        anchor = min(sym.anchor_starts)
        rotated = diagram.rotated(anchor)
        k = (len(canon) - 4) // 2
        a_word = rotated[2 : 2 + k]
        assert rotated == "LL" + a_word + "LL" + word_transpose(a_word)
        first = X * L.inverse() * X.inverse()
        wing = Y * evaluate(a_word) * X
        second = wing * L.inverse() * wing.inverse()
        assert first * second == evaluate(rotated)
        # g = (prefix^-1 h)^-1 * evaluate(rotated) * (prefix^-1 h)
        conj = evaluate(canon[:anchor]).inverse() * h
        fact = pair(first, second).conjugated_by(conj)
        assert fact.product == g
        out.append((fact, StrongClassLabel("axis", axis=sym.axis, anchor=anchor)))
    return out


def _canonical_with_labels(g: GroupElement):
    cls = classify(g)
    if cls.kind == "elliptic_order3_pos":
        h, _ = conjugator_to_rep(g)
        fact = pair(R, L.inverse()).conjugated_by(h)
        assert fact.product == g
        return [(fact, StrongClassLabel("full_group"))]
    if cls.kind == "parabolic" and cls.index == 2:
        h, _ = conjugator_to_rep(g)
        root = R.conjugated_by(h)
        fact = pair(root, root)
        assert fact.product == g
        return [(fact, StrongClassLabel("equal_twists"))]
    if cls.kind == "parabolic" and cls.index < 0 or cls.kind == "hyperbolic":
        return _axis_factorizations(g)
    return []


def canonical_2factorizations(g: GroupElement) -> list[Factorization]:
    """One verified representative per strong equivalence class (0, 1 or 2)."""
    return [fact for fact, _ in _canonical_with_labels(g)]


def strong_class_labels(g: GroupElement) -> list[StrongClassLabel]:
    """Labels parallel to canonical_2factorizations(g)."""
    return [label for _, label in _canonical_with_labels(g)]


def count_classes(g: GroupElement) -> tuple[int, int]:
    """(strong, weak) counts of equivalence classes of 2-factorizations."""
    cls = classify(g)
    if cls.kind == "elliptic_order3_pos":
        return 1, 1
    if cls.kind == "parabolic" and cls.index == 2:
        return 1, 1
    if cls.kind == "parabolic" and cls.index < 0 or cls.kind == "hyperbolic":
        strong = len(para_symmetries(_class_diagram(cls)))
        weak = 1 if (cls.kind == "parabolic" and strong == 2) else strong
        return strong, weak
    return 0, 0


def _sigma(f: Factorization) -> Factorization:
    return hurwitz_move(f, 1, 1)


def _sigma_inv(f: Factorization) -> Factorization:
    return hurwitz_move(f, 1, -1)


# Walk cutoff: the square of the Hurwitz move conjugates by the product, so
# entry norms along the orbit eventually grow without bound unless the orbit
# is finite; we stop a direction only after the norm exceeds the threshold
# this many times in a row, to ride out non-monotone dips.
_EXCEED_STREAK = 8
_WALK_CAP = 100_000


def decide_strong_equivalence(f1: Factorization, f2: Factorization) -> bool:
    """True iff f1 and f2 are related by Hurwitz moves alone."""
    if len(f1) != 2 or len(f2) != 2:
        raise DomainError("strong equivalence is implemented for pairs")
    if f1.product != f2.product:
        raise DomainError("strong equivalence preserves the product; products differ")
    threshold = 4 * max(f1.max_entry, f2.max_entry) + 64
    for step in (_sigma, _sigma_inv):
        cur = f1
        streak = 0
        for _ in range(_WALK_CAP):
            if cur == f2:
                return True
            cur = step(cur)
            if cur == f1:
                # finite orbit, fully explored
                return False
            streak = streak + 1 if cur.max_entry > threshold else 0
            if streak >= _EXCEED_STREAK:
                break
        else:
            raise AssertionError("Hurwitz walk failed to terminate")
    return False


def decide_weak_equivalence(f1: Factorization, f2: Factorization) -> bool:
    """True iff f1 and f2 are related by Hurwitz moves plus a conjugation."""
    if f1.product != f2.product:
        raise DomainError("weak equivalence is decided for equal products")
    if decide_strong_equivalence(f1, f2):
        return True
    g = f1.product
    cls = classify(g)
    if cls.kind.startswith("elliptic"):
        # centralizer is generated by g itself; conjugation by g is an
        # even power of the Hurwitz move, already covered
        return False
    root, n = primitive_root(g)
    conj = IDENTITY
    for _ in range(1, n):
        conj = conj * root
        if decide_strong_equivalence(f1.conjugated_by(conj), f2):
            return True
    return False


@dataclass(frozen=True)
class FactorizationRealityReport:
    """Reality of the strong classes of 2-factorizations of one element.

    classes holds "real" or "swapped-with-partner" per strong class;
    real_structure_count is the number of reflection axes of the cyclic
    diagram (for parabolic/hyperbolic) or 2 for the elliptic and R^2 cases,
    which admit both types of real structures.
    """

    applicable: bool
    reason: Optional[str] = None
    classes: tuple[str, ...] = ()
    real_structure_count: Optional[int] = None


def factorization_reality(g: GroupElement) -> FactorizationRealityReport:
    """Which strong classes of 2-factorizations of g are real."""
    if not exists_2factorization(g):
        return FactorizationRealityReport(False, reason="no 2-factorization exists")
    cls = classify(g)
    if cls.kind == "elliptic_order3_pos" or (cls.kind == "parabolic" and cls.index == 2):
        return FactorizationRealityReport(True, classes=("real",), real_structure_count=2)
    diagram = _class_diagram(cls)
    axes = para_symmetries(diagram)
    reflections = len(reflection_symmetries(diagram))
    if cls.kind == "parabolic":
        # the L^4 class: both classes real, two of the four reflections
        # preserve each of them and the two others swap them
        return FactorizationRealityReport(
            True, classes=("real", "real"), real_structure_count=reflections
        )
    if reflections == 0:
        return FactorizationRealityReport(
            False, reason="element is not real", real_structure_count=0
        )
    if len(axes) == 1:
        a_word = axis_word(diagram, axes[0])
        assert a_word == a_word[::-1], "real one-axis element with non-palindromic wing"
        return FactorizationRealityReport(
            True, classes=("real",), real_structure_count=reflections
        )
    return FactorizationRealityReport(
        True,
        classes=("swapped-with-partner", "swapped-with-partner"),
        real_structure_count=reflections,
    )


def oracle_products(
    bound: int,
) -> Iterator[tuple[TwistVector, TwistVector, GroupElement]]:
    """Brute-force stream of all twist pair products with |p|, |q| <= bound."""
    if bound < 1:
        raise DomainError("oracle bound must be >= 1")
    vectors = sorted(
        {
            TwistVector(p, q)
            for p in range(-bound, bound + 1)
            for q in range(-bound, bound + 1)
            if (p, q) != (0, 0) and gcd(p, q) == 1
        },
        key=lambda v: (v.p, v.q),
    )
    for u in vectors:
        tu = dehn_twist(u)
        for v in vectors:
            yield u, v, tu * dehn_twist(v)
