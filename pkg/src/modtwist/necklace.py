"""Necklace diagrams: stone words, group actions, statistics, enumeration.

A broken necklace diagram is a nonempty word over the stone alphabet,
serialized as 'O' (circle), 'S' (square), '>' and '<'.  Each stone
carries a monodromy in PSL(2,Z):

    O -> Y X^2 Y X^2 Y      S -> X^2 Y X^2      > -> XY = L      < -> YX

Circle and square stones are conjugates of L; the arrows are L and R^-1.
The diagram classes are orbits under combinations of cyclic shifts, the
inverse (reverse and invert stones), the dual (swap O/S and the arrows),
and the twisted shifts that dualize the wrapped stone.

Enumeration of w-pendant diagrams of length 6k - w filters stone words by
the pendant condition (monodromy = id for w = 0, a positive twist for
w = 1, 2-factorizable for w = 2) and counts orbits; for w = 2 the objects
are (diagram, strong-class) pairs and the class index is transported
along shifts by conjugation and along the inverse by the anti-automorphism
of tau_1.  The w = 0 filter runs by meet-in-the-middle on half-word
products, the w = 1 filter on a vectorized table of all products, so the
k = 2 counts take seconds.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetError, DomainError
from .factorization import (
    Factorization,
    StrongClassLabel,
    canonical_2factorizations,
    decide_strong_equivalence,
    exists_2factorization,
    strong_class_labels,
)
from .psl2 import (
    IDENTITY,
    TAU1,
    GroupElement,
    Y,
    evaluate,
    real_involution,
    twist_vector,
)

__all__ = [
    "STONES",
    "NecklaceStats",
    "NecklaceClass",
    "PendantDiagram",
    "EnumerationResult",
    "CATEGORIES",
    "validate_stone_word",
    "monodromy",
    "twisted_monodromy",
    "dual",
    "inverse",
    "shift",
    "twisted_shift",
    "transform",
    "stats",
    "orbit",
    "canonicalize",
    "pendants",
    "enumerate_classes",
]

STONES = "OS><"

STONE_MONODROMY = {
    "O": evaluate("Y X^2 Y X^2 Y"),
    "S": evaluate("X^2 Y X^2"),
    ">": evaluate("X Y"),
    "<": evaluate("Y X"),
}

_DUAL = str.maketrans("OS><", "SO<>")
_INVERT_STONE = str.maketrans("OS><", "OS<>")

# uncoated-diagram endpoint types (left, right) of the double segment
_ENDPOINTS = {"O": ("o", "o"), "S": ("x", "x"), ">": ("x", "o"), "<": ("o", "x")}

CATEGORIES = (
    "oriented",
    "nonoriented",
    "flat_oriented",
    "flat_nonoriented",
    "twisted_oriented",
    "twisted_nonoriented",
)


def validate_stone_word(word: str) -> str:
    if not word:
        raise DomainError("stone word must be nonempty")
    if set(word) - set(STONES):
        raise DomainError(f"stone word uses alphabet O, S, >, <: {word!r}")
    return word


def monodromy(word: str) -> GroupElement:
    """Product of the stone monodromies, in word order."""
    validate_stone_word(word)
    result = IDENTITY
    for stone in word:
        result = result * STONE_MONODROMY[stone]
    return result


def twisted_monodromy(word: str) -> GroupElement:
    """monodromy(word) * Y, the monodromy used for twisted diagrams."""
    return monodromy(word) * Y


def dual(word: str) -> str:
    return validate_stone_word(word).translate(_DUAL)


def inverse(word: str) -> str:
    return validate_stone_word(word)[::-1].translate(_INVERT_STONE)


def shift(word: str, k: int = 1) -> str:
    validate_stone_word(word)
    k %= len(word)
    return word[k:] + word[:k]


def twisted_shift(word: str, k: int = 1) -> str:
    """k twisted shifts: rotate one stone and dualize it as it wraps."""
    validate_stone_word(word)
    for _ in range(k % (2 * len(word))):
        word = word[1:] + word[0].translate(_DUAL)
    return word


def transform(word: str, action: str, k: int = 1) -> str:
    """Apply a named action: dual, inverse, shift or twisted_shift."""
    if action == "dual":
        return dual(word)
    if action == "inverse":
        return inverse(word)
    if action == "shift":
        return shift(word, k)
    if action == "twisted_shift":
        return twisted_shift(word, k)
    raise DomainError(f"unknown action {action!r}")


@dataclass(frozen=True)
class NecklaceStats:
    circles: int
    squares: int
    right_arrows: int
    left_arrows: int
    betti: int
    euler: int
    essential: int
    maximal: Optional[bool] = None
    essential_obstruction: Optional[bool] = None
    k: Optional[int] = None
    w: Optional[int] = None


def stats(word: str, k: Optional[int] = None, w: Optional[int] = None) -> NecklaceStats:
    """Stone counts, real-part Betti/Euler numbers and obstruction data.

    betti = 2(circles + squares) + 4 and euler = 2(circles - squares)
    describe the real part of the covering surface; essential counts the
    cyclically adjacent stone pairs whose facing endpoint types differ.
    With k and w supplied (and 6k - w equal to the length), maximal tests
    arrows + w = 2 and essential_obstruction tests essential <= 2k and
    essential + arrows <= 6k.
    """
    validate_stone_word(word)
    n_o = word.count("O")
    n_s = word.count("S")
    n_r = word.count(">")
    n_l = word.count("<")
    n = len(word)
    essential = sum(
        _ENDPOINTS[word[i]][1] != _ENDPOINTS[word[(i + 1) % n]][0] for i in range(n)
    )
    maximal = obstruction = None
    if k is not None or w is not None:
        if k is None or w is None:
            raise DomainError("maximality context needs both k and w")
        if w not in (0, 1, 2) or k < 1 or 6 * k - w != n:
            raise DomainError(
                f"inconsistent context: length {n} but 6k - w = {6 * k - w}"
            )
        maximal = n_r + n_l + w == 2
        obstruction = essential <= 2 * k and essential + n_r + n_l <= 6 * k
    return NecklaceStats(
        circles=n_o,
        squares=n_s,
        right_arrows=n_r,
        left_arrows=n_l,
        betti=2 * (n_o + n_s) + 4,
        euler=2 * (n_o - n_s),
        essential=essential,
        maximal=maximal,
        essential_obstruction=obstruction,
        k=k,
        w=w,
    )


@dataclass(frozen=True)
class NecklaceClass:
    category: str
    representative: str


@dataclass(frozen=True)
class PendantDiagram:
    """A broken necklace diagram together with one of its w-pendants.

    The label must name an actual strong class of w-factorizations of the
    diagram's monodromy, which is checked on construction.
    """

    diagram: str
    weight: int
    label: StrongClassLabel

    def __post_init__(self):
        if self.label not in pendants(self.diagram, self.weight):
            raise DomainError(
                f"{self.label} is not a {self.weight}-pendant of {self.diagram!r}"
            )


def orbit(word: str, category: str) -> set[str]:
    """All stone words in the orbit of word under the category's group."""
    validate_stone_word(word)
    if category not in CATEGORIES:
        raise DomainError(f"unknown category {category!r}")
    n = len(word)
    if category.startswith("twisted"):
        seeds = {word}
        if category == "twisted_nonoriented":
            seeds.add(inverse(word))
        out = set()
        for seed in seeds:
            current = seed
            for _ in range(2 * n):
                out.add(current)
                current = twisted_shift(current)
        return out
    seeds = {word}
    if category in ("nonoriented", "flat_nonoriented"):
        seeds.add(inverse(word))
    if category in ("flat_oriented", "flat_nonoriented"):
        seeds |= {dual(s) for s in seeds}
    return {shift(s, k) for s in seeds for k in range(n)}


def canonicalize(word: str, category: str) -> NecklaceClass:
    """Orbit-minimal representative of word in the given category."""
    return NecklaceClass(category, min(orbit(word, category)))


def pendants(word: str, w: int) -> list[StrongClassLabel]:
    """Strong-class labels of the w-pendants on the diagram (w <= 2).

    Empty when no w-factorization of the monodromy exists; label kinds are
    "empty" (w = 0), "single_twist" (w = 1) and the 2-factorization labels
    otherwise.
    """
    m = monodromy(word)
    if w == 0:
        return [StrongClassLabel("empty")] if m == IDENTITY else []
    if w == 1:
        return [StrongClassLabel("single_twist")] if twist_vector(m) else []
    if w == 2:
        return strong_class_labels(m)
    raise DomainError("pendant weight must be 0, 1 or 2")


@dataclass(frozen=True)
class EnumerationResult:
    k: int
    w: int
    category: str
    count: int
    representatives: tuple[tuple[str, str], ...]  # (stone word, pendant label)
    elapsed: float

    def summary(self) -> dict:
        return {
            "k": self.k,
            "w": self.w,
            "category": self.category,
            "count": self.count,
            "elapsed": round(self.elapsed, 3),
        }


DEFAULT_WORD_BUDGET = 4**14

_CODE = {stone: i for i, stone in enumerate(sorted(STONES))}  # ASCII order
_STONE_OF_CODE = sorted(STONES)
_INV_CODE = np.array([_CODE[_STONE_OF_CODE[i].translate(_INVERT_STONE)] for i in range(4)])


def _words_to_codes(words: list[str]) -> np.ndarray:
    n = len(words[0])
    flat = np.frombuffer("".join(words).encode(), dtype=np.uint8).reshape(-1, n)
    lut = np.zeros(256, dtype=np.int64)
    for stone, code in _CODE.items():
        lut[ord(stone)] = code
    return lut[flat]


def _canonical_count(words: list[str], category: str) -> tuple[int, list[str]]:
    """Count orbit-minimal words among a transform-closed word list."""
    if not words:
        return 0, []
    if len(words) < 2048:
        reps = sorted({min(orbit(word, category)) for word in words})
        return len(reps), reps
    codes = _words_to_codes(words)
    n = codes.shape[1]
    weights = 4 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    variants = [codes]
    if category == "nonoriented":
        variants.append(_INV_CODE[codes[:, ::-1]])
    packed = [
        np.concatenate([var[:, r:], var[:, :r]], axis=1) @ weights
        for var in variants
        for r in range(n)
    ]
    minima = np.minimum.reduce(packed)
    values = np.unique(minima)
    reps = []
    for value in values.tolist():
        digits = [(value >> (2 * (n - 1 - i))) & 3 for i in range(n)]
        reps.append("".join(_STONE_OF_CODE[d] for d in digits))
    return len(values), reps


def _stone_products(length: int) -> list[tuple[str, GroupElement]]:
    out = [("", IDENTITY)]
    for _ in range(length):
        out = [(w + s, g * STONE_MONODROMY[s]) for w, g in out for s in STONES]
    return out


def _identity_words(n: int) -> list[str]:
    """All stone words of length n with monodromy id (meet-in-the-middle)."""
    half = n // 2
    prefixes = _stone_products(half)
    suffix_map: dict[GroupElement, list[str]] = {}
    for word, g in _stone_products(n - half):
        suffix_map.setdefault(g, []).append(word)
    found = []
    for word, g in prefixes:
        for tail in suffix_map.get(g.inverse(), ()):
            found.append(word + tail)
    return found


def _word_of_index(idx: int, n: int) -> str:
    digits = [(idx >> (2 * (n - 1 - i))) & 3 for i in range(n)]
    return "".join(_STONE_OF_CODE[d] for d in digits)


_ASCII_OF_CODE = np.frombuffer("".join(_STONE_OF_CODE).encode(), dtype=np.uint8)


def _words_of_indices(indices: np.ndarray, n: int) -> list[str]:
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (indices[:, None] >> shifts) & 3
    text = _ASCII_OF_CODE[digits].tobytes().decode()
    return [text[i * n : (i + 1) * n] for i in range(len(indices))]


def _scan_chunk(args: tuple[int, int, int, str]) -> list[str]:
    """Filter the words with indices in [start, stop) by the named condition."""
    n, start, stop, mode = args
    out = []
    for idx in range(start, stop):
        word = _word_of_index(idx, n)
        m = monodromy(word)
        if mode == "twist":
            if twist_vector(m):
                out.append(word)
        elif exists_2factorization(m):
            out.append(word)
    return out


def _parallel_scan(n: int, mode: str, jobs: int) -> list[str]:
    total = 4**n
    if jobs <= 1 or total < 4096:
        return _scan_chunk((n, 0, total, mode))
    step = -(-total // jobs)
    chunks = [(n, lo, min(lo + step, total), mode) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    return [word for part in parts for word in part]


def _product_table(n: int) -> np.ndarray:
    """(4^n, 2, 2) table of monodromies; first stone is the high digit."""
    mats = np.array(
        [STONE_MONODROMY[s].matrix() for s in _STONE_OF_CODE], dtype=np.int64
    )
    table = np.eye(2, dtype=np.int64)[None, :, :]
    for _ in range(n):
        table = np.einsum("sij,njk->snik", mats, table).reshape(-1, 2, 2)
    return table

def _twist_words_vector(n: int) -> list[str]:
    table = _product_table(n)
    a, b = table[:, 0, 0], table[:, 0, 1]
    c, d = table[:, 1, 0], table[:, 1, 1]
    tr = a + d
    sign = np.where(tr < 0, -1, 1)
    a, b, c, d = a * sign, b * sign, c * sign, d * sign
    ok = (a + d == 2) & (b <= 0) & (c >= 0)
    q = np.rint(np.sqrt(np.where(ok, -b, 0))).astype(np.int64)
    p = np.rint(np.sqrt(np.where(ok, c, 0))).astype(np.int64)
    ok &= (q * q == -b) & (p * p == c) & (np.gcd(p, q) == 1)
    ok &= (a == 1 - p * q) | (a == 1 + p * q)
    return _words_of_indices(np.nonzero(ok)[0], n)


def _two_pendant_words(n: int, jobs: int = 1) -> list[str]:
    """Stone words whose monodromy admits a 2-factorization."""
    if n < 9:
        return _parallel_scan(n, "two_pendant", jobs)
    # trace prefilter on the product table, exact check on the survivors
    table = _product_table(n)
    tr = np.abs(table[:, 0, 0] + table[:, 1, 1])
    lo = np.rint(np.sqrt(np.maximum(2 - tr, 0))).astype(np.int64)
    hi = np.rint(np.sqrt(2 + tr)).astype(np.int64)
    mask = (lo * lo == 2 - tr) | (hi * hi == 2 + tr)
    words = _words_of_indices(np.nonzero(mask)[0], n)
    return [w for w in words if exists_2factorization(monodromy(w))]


class _PendantTransport:
    """Transports strong-class indices of 2-factorizations along the actions."""

    def __init__(self):
        self._facts: dict[str, list[Factorization]] = {}

    def factorizations(self, word: str) -> list[Factorization]:
        if word not in self._facts:
            self._facts[word] = canonical_2factorizations(monodromy(word))
        return self._facts[word]

    def _locate(self, word: str, fact: Factorization) -> int:
        matches = [
            i
            for i, canonical in enumerate(self.factorizations(word))
            if decide_strong_equivalence(fact, canonical)
        ]
        assert len(matches) == 1, "factorization matches a unique strong class"
        return matches[0]

    def shifted(self, word: str, idx: int) -> tuple[str, int]:
        new_word = shift(word)
        conj = STONE_MONODROMY[word[0]]
        moved = self.factorizations(word)[idx].conjugated_by(conj)
        return new_word, self._locate(new_word, moved)

    def inverted(self, word: str, idx: int) -> tuple[str, int]:
        new_word = inverse(word)
        m1, m2 = self.factorizations(word)[idx].factors
        moved = Factorization((real_involution(TAU1, m2), real_involution(TAU1, m1)))
        return new_word, self._locate(new_word, moved)


def _count_pendant_pairs(words: list[str], category: str) -> tuple[int, list[tuple[str, str]]]:
    transport = _PendantTransport()
    pending = set()
    labels: dict[str, list[StrongClassLabel]] = {}
    for word in words:
        labels[word] = strong_class_labels(monodromy(word))
        for idx in range(len(labels[word])):
            pending.add((word, idx))
    reps = []
    while pending:
        seed = min(pending)
        seen = {seed}
        queue = [seed]
        while queue:
            word, idx = queue.pop()
            nexts = [transport.shifted(word, idx)]
            if category == "nonoriented":
                nexts.append(transport.inverted(word, idx))
            for item in nexts:
                if item not in seen:
                    seen.add(item)
                    queue.append(item)
        rep_word, rep_idx = min(seen)
        reps.append((rep_word, labels[rep_word][rep_idx].describe()))
        pending -= seen
    reps.sort()
    return len(reps), reps


def enumerate_classes(
    k: int,
    w: int,
    category: str = "nonoriented",
    budget: int = DEFAULT_WORD_BUDGET,
    engine: str = "auto",
    jobs: int = 1,
) -> EnumerationResult:
    """Count w-pendant necklace diagram classes of length 6k - w.

    category is "oriented" (cyclic shifts, with the pendant conjugated
    along) or "nonoriented" (shifts and the inverse).  The raw search
    space 4^(6k-w) must fit the word budget.  engine "python" forces the
    scalar filters, "vector" the table-based ones (results agree); jobs
    splits the scalar scans over processes.
    """
    if k < 1 or w not in (0, 1, 2):
        raise DomainError("need k >= 1 and w in {0, 1, 2}")
    if category not in ("oriented", "nonoriented"):
        raise DomainError("enumeration categories are oriented and nonoriented")
    n = 6 * k - w
    if 4**n > budget:
        raise BudgetError(f"4^{n} stone words exceed the budget of {budget}")
    start = time.perf_counter()
    if w == 0:
        words = _identity_words(n)
        count, rep_words = _canonical_count(words, category)
        reps = [(word, StrongClassLabel("empty").describe()) for word in rep_words]
    elif w == 1:
        use_vector = engine == "vector" or (engine == "auto" and n >= 9)
        words = (
            _twist_words_vector(n)
            if use_vector
            else _parallel_scan(n, "twist", jobs)
        )
        count, rep_words = _canonical_count(words, category)
        reps = [(word, StrongClassLabel("single_twist").describe()) for word in rep_words]
    else:
        words = _two_pendant_words(n, jobs)
        count, reps = _count_pendant_pairs(words, category)
    return EnumerationResult(
        k=k,
        w=w,
        category=category,
        count=count,
        representatives=tuple(reps),
        elapsed=time.perf_counter() - start,
    )
