"""Cyclic words over {L, R}: symmetries, para-symmetries and special forms.

A cyclic diagram is the cutting word of a parabolic or hyperbolic element
displayed on a circle.  Reflections of Z_m are encoded by the residue c
with i -> c - i; for a para-symmetry m is even and c odd, so the
reflection is fixed-point free, and the two adjacent transposed pairs
{i, i+1} with 2i = c - 1 (mod m) are its anchors.  A para-symmetry keeps
the four anchors (all of type L) and flips every other letter; it is the
same thing as a presentation of the underlying element as
L.L.A.L.L.At, where At reverses A and swaps L <-> R.

Diagrams with exactly two para-symmetries come in two families: the axes
either share an anchor (the "shared-axes" chain LL(LR)^m LL(LR)^m) or are
disjoint (the "disjoint-axes" words built from an odd rotation fraction q
and an inserted word B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .errors import DomainError

__all__ = [
    "CyclicDiagram",
    "ParaSymmetry",
    "DiagramForm",
    "word_transpose",
    "canonical_rotation",
    "para_symmetries",
    "reflection_symmetries",
    "axis_word",
    "build_shared_axis_diagram",
    "build_disjoint_axis_diagram",
    "recognize",
    "is_even_word",
]

_FLIP = str.maketrans("LR", "RL")


def word_transpose(word: str) -> str:
    """Reverse the word and swap L <-> R (matrix transpose on evaluations)."""
    return word[::-1].translate(_FLIP)


def canonical_rotation(word: str) -> str:
    """Lexicographically least rotation (L < R)."""
    if not word:
        raise DomainError("empty cyclic word")
    return min(word[i:] + word[:i] for i in range(len(word)))


def _validate_letters(word: str) -> None:
    if not word:
        raise DomainError("empty cyclic word")
    if set(word) - {"L", "R"}:
        raise DomainError(f"cyclic words use letters L/R only: {word!r}")


@dataclass(frozen=True)
class CyclicDiagram:
    """A nonempty cyclic word over {L, R}, stored as its least rotation."""

    letters: str

    def __post_init__(self):
        _validate_letters(self.letters)
        object.__setattr__(self, "letters", canonical_rotation(self.letters))

    def __len__(self):
        return len(self.letters)

    def rotated(self, k: int) -> str:
        k %= len(self.letters)
        return self.letters[k:] + self.letters[:k]


@dataclass(frozen=True)
class ParaSymmetry:
    """A para-symmetry axis c with its two anchor-pair start positions."""

    axis: int
    anchor_starts: tuple[int, int]


def para_symmetries(diagram: CyclicDiagram) -> tuple[ParaSymmetry, ...]:
    """All para-symmetries of the diagram, sorted by axis."""
    w = diagram.letters
    m = len(w)
    if m % 2 or m < 4:
        return ()
    half = m // 2
    found = []
    for c in range(1, m, 2):
        j1 = ((c - 1) // 2) % half
        j2 = j1 + half
        anchors = (j1, (j1 + 1) % m, j2, (j2 + 1) % m)
        if any(w[j] != "L" for j in anchors):
            continue
        anchor_set = set(anchors)
        if all(
            w[(c - j) % m] != w[j]
            for j in range(m)
            if j not in anchor_set
        ):
            found.append(ParaSymmetry(c, (j1, j2)))
    return tuple(found)


def reflection_symmetries(diagram: CyclicDiagram) -> tuple[int, ...]:
    """Axes c of all reflections i -> c - i preserving every letter."""
    w = diagram.letters
    m = len(w)
    return tuple(
        c for c in range(m) if all(w[(c - i) % m] == w[i] for i in range(m))
    )


def axis_word(diagram: CyclicDiagram, axis: Union[ParaSymmetry, int]) -> str:
    """The word A of the presentation L.L.A.L.L.At read at the given axis.

    Both anchor pairs of the axis give a valid reading (A and At); the
    lexicographically smaller one is returned.
    """
    if isinstance(axis, int):
        matches = [s for s in para_symmetries(diagram) if s.axis == axis]
        if not matches:
            raise DomainError(f"axis {axis} is not a para-symmetry of {diagram.letters}")
        axis = matches[0]
    elif axis not in para_symmetries(diagram):
        raise DomainError(f"{axis} is not a para-symmetry of {diagram.letters}")
    return min(_axis_reading(diagram, j) for j in axis.anchor_starts)


def _axis_reading(diagram: CyclicDiagram, anchor_start: int) -> str:
    """Read L.L.A.L.L.At starting at the given anchor pair; returns A."""
    w = diagram.rotated(anchor_start)
    m = len(w)
    k = (m - 4) // 2
    a = w[2 : 2 + k]
    if not (
        w[:2] == "LL" and w[2 + k : 4 + k] == "LL" and w[4 + k :] == word_transpose(a)
    ):
        raise DomainError(f"position {anchor_start} is not an anchor pair")
    return a


def build_shared_axis_diagram(m: int) -> CyclicDiagram:
    """The chain LL(LR)^m LL(LR)^m whose two para-symmetries share an anchor."""
    if m < 0:
        raise DomainError("chain parameter must be >= 0")
    return CyclicDiagram(("LL" + "LR" * m) * 2)


def _rotation_base_word(n: int) -> str:
    k = (n - 1) // 2
    return ("l" + "lr" * k) * 2


def build_disjoint_axis_diagram(
    q: Union[Fraction, tuple[int, int]], insert: str = ""
) -> CyclicDiagram:
    """The two-para-symmetry word with axis angle pi*q and inserted word B.

    q must be a fraction with odd numerator and odd denominator >= 3,
    0 < q < 1.  The base word over {l, r} is the 1/n pattern re-indexed by
    i -> numerator*i, then copies of insert / its transpose are placed
    between consecutive base letters and l, r are doubled to LL, RR.
    """
    if not isinstance(q, Fraction):
        q = Fraction(*q)
    num, den = q.numerator, q.denominator
    if not (0 < q < 1) or num % 2 == 0 or den % 2 == 0 or den < 3:
        raise DomainError(f"rotation fraction must be odd/odd in (0,1), got {q}")
    if set(insert) - {"L", "R"}:
        raise DomainError(f"insert must be a word over L/R: {insert!r}")
    base = _rotation_base_word(den)
    two_n = 2 * den
    reindexed = [base[(num * i) % two_n] for i in range(two_n)]
    insert_t = word_transpose(insert)
    parts = []
    for i in range(den):
        parts.append(reindexed[2 * i] * 2)
        parts.append(insert)
        parts.append(reindexed[2 * i + 1] * 2)
        parts.append(insert_t)
    return CyclicDiagram("".join(parts).upper())


@dataclass(frozen=True)
class DiagramForm:
    """Result of recognize(): which two-axis family (if any) a diagram is in.

    kind is "shared_axes" (with chain parameter m), "disjoint_axes" (with
    rotation fraction q and insert word), "one_axis" or "no_axis".
    """

    kind: str
    m: Optional[int] = None
    q: Optional[Fraction] = None
    insert: Optional[str] = None

    def describe(self) -> str:
        if self.kind == "shared_axes":
            return f"shared_axes(m={self.m})"
        if self.kind == "disjoint_axes":
            return f"disjoint_axes(q={self.q}, insert={self.insert!r})"
        return self.kind


def recognize(diagram: CyclicDiagram) -> DiagramForm:
    """Classify a diagram by its para-symmetry count and two-axis family."""
    symmetries = para_symmetries(diagram)
    if not symmetries:
        return DiagramForm("no_axis")
    if len(symmetries) == 1:
        return DiagramForm("one_axis")
    assert len(symmetries) == 2, "more than two para-symmetries"
    s1, s2 = symmetries
    anchors1 = {j for start in s1.anchor_starts for j in (start, (start + 1) % len(diagram))}
    anchors2 = {j for start in s2.anchor_starts for j in (start, (start + 1) % len(diagram))}
    if anchors1 & anchors2:
        m = (len(diagram) - 4) // 4
        if diagram != build_shared_axis_diagram(m):
            raise AssertionError(
                f"shared-anchor diagram {diagram.letters} is not the chain with m={m}"
            )
        return DiagramForm("shared_axes", m=m)
    return _recognize_disjoint(diagram, s1, s2)


def _recognize_disjoint(
    diagram: CyclicDiagram, s1: ParaSymmetry, s2: ParaSymmetry
) -> DiagramForm:
    m_len = len(diagram)
    shift = (s2.axis - s1.axis) % m_len
    n = m_len // gcd(m_len, shift)
    if n % 2 == 0 or n < 3 or m_len % (2 * n):
        raise AssertionError(f"bad rotation order {n} for {diagram.letters}")
    insert_len = m_len // (2 * n) - 2
    base = _rotation_base_word(n)
    two_n = 2 * n
    candidates = []
    for rot in range(m_len):
        v = diagram.rotated(rot)
        unit = 2 + insert_len
        blocks = [v[i * unit : i * unit + 2] for i in range(two_n)]
        if any(b not in ("LL", "RR") for b in blocks):
            continue
        inserts = [v[i * unit + 2 : (i + 1) * unit] for i in range(two_n)]
        b_word = inserts[0]
        b_word_t = word_transpose(b_word)
        if any(inserts[i] != (b_word if i % 2 == 0 else b_word_t) for i in range(two_n)):
            continue
        pattern = "".join("l" if b == "LL" else "r" for b in blocks)
        for num in range(1, n, 2):
            if gcd(num, n) != 1:
                continue
            if pattern == "".join(base[(num * i) % two_n] for i in range(two_n)):
                candidates.append((Fraction(num, n), b_word))
    if not candidates:
        raise AssertionError(
            f"two disjoint para-symmetries but no disjoint-axes form: {diagram.letters}"
        )
    q, insert = min(candidates)
    return DiagramForm("disjoint_axes", q=q, insert=insert)


def _cyclic_runs(word: str) -> list[tuple[str, int]]:
    """Run-length encoding of the cyclic word (wrap-around run merged)."""
    if len(set(word)) == 1:
        return [(word[0], len(word))]
    start = next(i for i in range(len(word)) if word[i] != word[i - 1])
    w = word[start:] + word[:start]
    runs = []
    for ch in w:
        if runs and runs[-1][0] == ch:
            runs[-1] = (ch, runs[-1][1] + 1)
        else:
            runs.append((ch, 1))
    return runs


def cutting_period_cycle(diagram: CyclicDiagram) -> tuple[int, ...]:
    """The run-length cycle [a1, ..., a2n] of the diagram."""
    return tuple(length for _, length in _cyclic_runs(diagram.letters))


def is_even_word(word: Union[str, CyclicDiagram]) -> bool:
    """True iff every run of the cyclic word has even length."""
    letters = word.letters if isinstance(word, CyclicDiagram) else word
    if not letters:
        return True
    _validate_letters(letters)
    return all(length % 2 == 0 for _, length in _cyclic_runs(letters))
