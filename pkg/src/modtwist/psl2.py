"""Exact arithmetic, normal forms and conjugacy in the modular group PSL(2,Z).

Conventions
-----------
Matrices act on row vectors on the right, so products read left to right.
The generators are fixed as

    X = [[1, -1], [1, 0]]      (order 3)
    Y = [[0, 1], [-1, 0]]      (order 2)
    L = X*Y  = [[1, 1], [0, 1]]
    R = X^2*Y = [[1, 0], [1, 1]]

which satisfy X^3 = Y^2 = -id in SL(2,Z), X = R*L^-1 and
Y = L*R^-1*L = R^-1*L*R^-1.  The positive Dehn twist along a primitive
row vector (p, q) is

    twist(p, q) = [[1 - p*q, -q^2], [p^2, 1 + p*q]],

so twist(1, 0) = R and twist(0, 1) = L^-1; positive twists form the
conjugacy class of R, and L lies in the *inverse* twist class.

Elements of PSL(2,Z) are stored as the SL(2,Z) lift whose first nonzero
entry in reading order (a, b, c, d) is positive.  Python integers are
unbounded, so no overflow handling is needed anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, ParseError

__all__ = [
    "GroupElement",
    "TwistVector",
    "SyllableWord",
    "ConjugacyClass",
    "RealStructure",
    "IDENTITY",
    "X",
    "Y",
    "L",
    "R",
    "TAU1",
    "TAU2",
    "evaluate",
    "parse_matrix",
    "normal_form",
    "classify",
    "conjugator_to_rep",
    "cutting_conjugator",
    "dehn_twist",
    "twist_vector",
    "real_involution",
    "is_real_element",
    "primitive_root",
    "abelian_degree",
]


@dataclass(frozen=True)
class GroupElement:
    """An element of PSL(2,Z), stored as a sign-normalized det-1 matrix."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(
                "matrix determinant must be 1, got %d"
                % (self.a * self.d - self.b * self.c)
            )
        for entry in (self.a, self.b, self.c, self.d):
            if entry > 0:
                break
            if entry < 0:
                object.__setattr__(self, "a", -self.a)
                object.__setattr__(self, "b", -self.b)
                object.__setattr__(self, "c", -self.c)
                object.__setattr__(self, "d", -self.d)
                break

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "GroupElement":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IDENTITY
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugated_by(self, h: "GroupElement") -> "GroupElement":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    @property
    def trace(self) -> int:
        """Trace of the normalized lift (defined up to sign in PSL)."""
        return self.a + self.d

    @property
    def max_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __repr__(self):
        return f"GroupElement({self.a}, {self.b}, {self.c}, {self.d})"


IDENTITY = GroupElement(1, 0, 0, 1)
X = GroupElement(1, -1, 1, 0)
Y = GroupElement(0, 1, -1, 0)
L = GroupElement(1, 1, 0, 1)
R = GroupElement(1, 0, 1, 1)

_GENERATORS = {"L": L, "R": R, "X": X, "Y": Y}


@dataclass(frozen=True)
class TwistVector:
    """A primitive integer vector (p, q), defined up to overall sign."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"twist vector ({self.p}, {self.q}) is not primitive")
        if self.p < 0 or (self.p == 0 and self.q < 0):
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)


@dataclass(frozen=True)
class SyllableWord:
    """A reduced word in the free product Z3 * Z2.

    Syllables are ("X", 1), ("X", 2) or ("Y", 1); adjacent syllables come
    from different factors.
    """

    syllables: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for (g1, _), (g2, _) in zip(self.syllables, self.syllables[1:]):
            if g1 == g2:
                raise DomainError("adjacent syllables from the same factor")
        for gen, exp in self.syllables:
            if gen == "X" and exp in (1, 2):
                continue
            if gen == "Y" and exp == 1:
                continue
            raise DomainError(f"bad syllable ({gen}, {exp})")

    def __len__(self):
        return len(self.syllables)

    def to_word(self) -> str:
        """Serialize in the grammar accepted by :func:`evaluate`."""
        parts = []
        for gen, exp in self.syllables:
            parts.append(gen if exp == 1 else f"{gen}^{exp}")
        return " ".join(parts)


@dataclass(frozen=True)
class ConjugacyClass:
    """Tagged conjugacy class of an element of PSL(2,Z).

    kind is one of "identity", "elliptic_order2", "elliptic_order3_pos",
    "elliptic_order3_neg", "parabolic", "hyperbolic".  Parabolic classes
    carry the signed index n with g ~ R^n (n < 0 encodes all-L cutting
    words); hyperbolic classes carry the cutting word as a cyclic diagram.
    """

    kind: str
    index: Optional[int] = None
    cutting_word: Optional[str] = None

    def __post_init__(self):
        if self.kind == "parabolic" and not self.index:
            raise DomainError("parabolic class needs a nonzero index")
        if self.kind == "hyperbolic":
            w = self.cutting_word
            if not w or "L" not in w or "R" not in w:
                raise DomainError("hyperbolic cutting word must contain both letters")

    @property
    def diagram_word(self) -> Optional[str]:
        """Cutting word of the cyclic diagram (parabolic and hyperbolic only)."""
        if self.kind == "hyperbolic":
            return self.cutting_word
        if self.kind == "parabolic":
            letter = "R" if self.index > 0 else "L"
            return letter * abs(self.index)
        return None

    def describe(self) -> str:
        if self.kind == "parabolic":
            return f"parabolic({self.index:+d})"
        if self.kind == "hyperbolic":
            return f"hyperbolic({self.cutting_word})"
        return self.kind


@dataclass(frozen=True)
class RealStructure:
    """An involutive element of PGL(2,Z) \\ PSL(2,Z): a det -1 matrix of order 2."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != -1:
            raise DomainError("real structure lift must have determinant -1")
        for entry in (self.a, self.b, self.c, self.d):
            if entry > 0:
                break
            if entry < 0:
                object.__setattr__(self, "a", -self.a)
                object.__setattr__(self, "b", -self.b)
                object.__setattr__(self, "c", -self.c)
                object.__setattr__(self, "d", -self.d)
                break
        sq = (
            self.a * self.a + self.b * self.c,
            self.b * (self.a + self.d),
            self.c * (self.a + self.d),
            self.d * self.d + self.b * self.c,
        )
        if sq not in ((1, 0, 0, 1), (-1, 0, 0, -1)):
            raise DomainError("real structure must square to the identity in PGL")


# The displayed actions tau1^(L) = R^-1, tau1^(X) = X, tau2^(R) = R pin
# these representatives; [[0,1],[1,0]] swaps the two twist directions and
# [[1,0],[0,-1]] fixes them.
TAU1 = RealStructure(0, 1, 1, 0)
TAU2 = RealStructure(1, 0, 0, -1)


_TOKEN = re.compile(r"\s*([LRXY])(\^(-?\d+))?\s*")


def evaluate(word: str) -> GroupElement:
    """Evaluate a word over L, R, X, Y with optional integer exponents.

    Tokens may be juxtaposed or whitespace-separated: "R L^-1", "RL^-1"
    and "X^3" are all valid.  The empty word is the identity.
    """
    result = IDENTITY
    pos = 0
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m:
            raise ParseError(f"unexpected input at position {pos}: {word[pos:]!r}")
        gen = _GENERATORS[m.group(1)]
        exp = int(m.group(3)) if m.group(3) is not None else 1
        result = result * gen**exp
        pos = m.end()
    return result


_MATRIX = re.compile(
    r"\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,"
    r"\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$"
)


def parse_matrix(text: str) -> GroupElement:
    """Parse a matrix literal of the form [[a,b],[c,d]]."""
    m = _MATRIX.match(text)
    if not m:
        raise ParseError(f"not a matrix literal: {text!r}")
    a, b, c, d = map(int, m.groups())
    if a * d - b * c != 1:
        raise ParseError(f"matrix {text!r} has determinant {a * d - b * c}, not 1")
    return GroupElement(a, b, c, d)


def parse_element(text: str) -> GroupElement:
    """Parse either a word over L/R/X/Y or a [[a,b],[c,d]] matrix literal."""
    if text.lstrip().startswith("["):
        return parse_matrix(text)
    return evaluate(text)


def _syllable_element(gen: str, exp: int) -> GroupElement:
    return _GENERATORS[gen] ** exp


def _push_syllable(stack: list, gen: str, exp: int) -> None:
    order = 3 if gen == "X" else 2
    exp %= order
    if exp == 0:
        return
    if stack and stack[-1][0] == gen:
        prev_gen, prev_exp = stack.pop()
        _push_syllable(stack, gen, prev_exp + exp)
    else:
        stack.append((gen, exp))


def normal_form(g: GroupElement) -> SyllableWord:
    """The unique reduced alternating word in Z3 * Z2 evaluating to g.

    Works by the continued-fraction peeling g = L^(q1) Y L^(q2) Y ... L^(qk)
    (Euclidean algorithm on the first column), followed by the rewriting
    L -> XY, L^-1 -> Y X^2 and free-product reduction.
    """
    a, b, c, d = g.a, g.b, g.c, g.d
    atoms: list = []
    while c != 0:
        q = a // c
        atoms.append(("L", q))
        atoms.append(("Y", 1))
        a, b = a - q * c, b - q * d
        # multiply by Y on the left: rows swap with a sign
        a, b, c, d = c, d, -a, -b
    atoms.append(("L", b if a == 1 else -b))

    stack: list = []
    for gen, exp in atoms:
        if gen == "Y":
            _push_syllable(stack, "Y", 1)
        elif exp > 0:
            for _ in range(exp):
                _push_syllable(stack, "X", 1)
                _push_syllable(stack, "Y", 1)
        else:
            for _ in range(-exp):
                _push_syllable(stack, "Y", 1)
                _push_syllable(stack, "X", 2)
    return SyllableWord(tuple(stack))


def _classify_full(g: GroupElement):
    """Returns (ConjugacyClass, u, found_word) with g = u * eval * u^-1.

    For parabolic and hyperbolic classes, found_word is the rotation of the
    cutting word produced by cyclic reduction, and
    g = u * evaluate(found_word) * u^-1 holds exactly.  For the other kinds
    found_word is None and the middle element is the single-syllable
    representative (identity, Y, X or X^2).
    """
    syl = list(normal_form(g).syllables)
    u = IDENTITY
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        gen, e_first = syl[0]
        _, e_last = syl[-1]
        u = u * _syllable_element(gen, e_first)
        syl = syl[1:-1]
        merged = (e_last + e_first) % (3 if gen == "X" else 2)
        if merged:
            syl.append((gen, merged))

    if not syl:
        return ConjugacyClass("identity"), u, None
    if len(syl) == 1:
        gen, exp = syl[0]
        if gen == "Y":
            kind = "elliptic_order2"
        else:
            kind = "elliptic_order3_pos" if exp == 1 else "elliptic_order3_neg"
        return ConjugacyClass(kind), u, (gen, exp)

    if syl[0][0] == "Y":
        # rotate one syllable so the word starts in the Z3 factor
        u = u * Y
        syl = syl[1:] + [syl[0]]
    letters = "".join("L" if exp == 1 else "R" for gen, exp in syl if gen == "X")
    assert 2 * len(letters) == len(syl)
    if "R" not in letters:
        return ConjugacyClass("parabolic", index=-len(letters)), u, letters
    if "L" not in letters:
        return ConjugacyClass("parabolic", index=len(letters)), u, letters
    return ConjugacyClass("hyperbolic", cutting_word=letters), u, letters


def classify(g: GroupElement) -> ConjugacyClass:
    """Conjugacy class of g; hyperbolic cutting words are canonically rotated."""
    cls, _, found = _classify_full(g)
    if cls.kind == "hyperbolic":
        return ConjugacyClass("hyperbolic", cutting_word=_least_rotation(found))
    return cls


def _least_rotation(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word)))


def cutting_conjugator(g: GroupElement) -> tuple[GroupElement, str]:
    """(h, w) with w the canonical rotation of the cutting word and
    g = h^-1 * evaluate(w) * h exactly.  Parabolic or hyperbolic g only."""
    cls, u, found = _classify_full(g)
    if cls.kind not in ("parabolic", "hyperbolic"):
        raise DomainError(f"{cls.kind} element has no cutting word")
    canon = _least_rotation(found)
    r = next(i for i in range(len(found)) if found[i:] + found[:i] == canon)
    prefix = evaluate(found[:r])
    # evaluate(found) = prefix * evaluate(canon) * prefix^-1
    h = (u * prefix).inverse()
    return h, canon


def conjugator_to_rep(g: GroupElement) -> tuple[GroupElement, GroupElement]:
    """(h, rep) with rep the canonical class representative and g = h^-1 * rep * h.

    Representatives: identity, Y, X, X^2, R^n (signed n for parabolic
    classes), or the evaluation of the canonical rotation of the cutting
    word for hyperbolic classes.
    """
    cls, u, found = _classify_full(g)
    if cls.kind == "identity":
        return IDENTITY, IDENTITY
    if cls.kind in ("elliptic_order2", "elliptic_order3_pos", "elliptic_order3_neg"):
        rep = _syllable_element(*found)
        return u.inverse(), rep
    if cls.kind == "parabolic":
        n = cls.index
        if n > 0:
            # found is R^n on the nose
            return u.inverse(), R**n
        # g = u * L^|n| * u^-1 and L^|n| = Y * R^n * Y^-1
        return (u * Y).inverse(), R**n
    h, canon = cutting_conjugator(g)
    return h, evaluate(canon)


def dehn_twist(v: TwistVector | tuple[int, int]) -> GroupElement:
    """The positive Dehn twist along the primitive vector v."""
    if not isinstance(v, TwistVector):
        v = TwistVector(*v)
    p, q = v.p, v.q
    return GroupElement(1 - p * q, -q * q, p * p, 1 + p * q)


def twist_vector(g: GroupElement) -> Optional[TwistVector]:
    """The twist vector of g if g is a positive Dehn twist, else None."""
    a, b, c, d = g.a, g.b, g.c, g.d
    if a + d == -2:
        a, b, c, d = -a, -b, -c, -d
    elif a + d != 2:
        return None
    if b > 0 or c < 0:
        return None
    q = math.isqrt(-b)
    p = math.isqrt(c)
    if q * q != -b or p * p != c or math.gcd(p, q) != 1:
        return None
    if a != 1 - p * q:
        q = -q
    if (a, b, c, d) != (1 - p * q, -q * q, p * p, 1 + p * q):
        return None
    return TwistVector(p, q)


def real_involution(tau: RealStructure, g: GroupElement) -> GroupElement:
    """The involutive anti-automorphism g -> tau * g^-1 * tau."""
    gi = g.inverse()
    # (tau * gi) * tau computed entrywise; determinant (-1)*1*(-1) = 1
    m00 = tau.a * gi.a + tau.b * gi.c
    m01 = tau.a * gi.b + tau.b * gi.d
    m10 = tau.c * gi.a + tau.d * gi.c
    m11 = tau.c * gi.b + tau.d * gi.d
    return GroupElement(
        m00 * tau.a + m01 * tau.c,
        m00 * tau.b + m01 * tau.d,
        m10 * tau.a + m11 * tau.c,
        m10 * tau.b + m11 * tau.d,
    )


def is_real_element(g: GroupElement) -> bool:
    """True iff g is a product of two real structures in PGL(2,Z).

    Identity, elliptic and parabolic elements are always real; a hyperbolic
    element is real iff its cyclic diagram has a reflection symmetry.
    """
    cls = classify(g)
    if cls.kind != "hyperbolic":
        return True
    from .diagrams import CyclicDiagram, reflection_symmetries

    return bool(reflection_symmetries(CyclicDiagram(cls.cutting_word)))


def primitive_root(g: GroupElement) -> tuple[GroupElement, int]:
    """(h, n) with g = h^n, n maximal.  Parabolic or hyperbolic g only."""
    cls, _, _ = _classify_full(g)
    if cls.kind not in ("parabolic", "hyperbolic"):
        raise DomainError(f"primitive root undefined for {cls.kind} element")
    h, canon = cutting_conjugator(g)
    if cls.kind == "parabolic":
        period = 1
    else:
        period = next(
            p
            for p in range(1, len(canon) + 1)
            if len(canon) % p == 0 and canon == canon[:p] * (len(canon) // p)
        )
    n = len(canon) // period
    root = evaluate(canon[:period]).conjugated_by(h)
    assert root**n == g
    return root, n


_DEGREE = {("X", 1): 2, ("X", 2): 4, ("Y", 1): 3}


def abelian_degree(g: GroupElement) -> int:
    """Image of g under the abelianization PSL(2,Z) ->> Z6 with deg R = 1."""
    return sum(_DEGREE[s] for s in normal_form(g).syllables) % 6
