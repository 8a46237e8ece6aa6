"""Pattern classes of 2x2 (0,1)-matrices and the exhaustive counting oracle.

The sixteen 2x2 matrices fall into seven orbits under row exchange and
column exchange, named I, GAMMA, C, T, L, J, O.  A k x n matrix "avoids" a
set of classes when no choice of two rows and two columns (order kept)
produces a member of any of their orbits.  Matrices are stored as row
bitmasks with bit j holding column j.

Containment only ever involves two rows, so a matrix avoids a class set
exactly when every pair of its rows is compatible.  Per row pair, each
column has one of four types (the two bits it contributes), and a 2x2
submatrix lies in a given orbit iff its two column types form one of a
fixed set of unordered pairs; that reduces the scan to a handful of mask
operations.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

__all__ = [
    "SYMBOLS",
    "Pattern2x2",
    "PatternClass",
    "CLASSES",
    "AvoidanceSpec",
    "BitMatrix",
    "SizeLimitExceeded",
    "class_orbit",
    "contains_pattern",
    "contains_class",
    "avoids",
    "count_avoiders",
    "count_avoiders_naive",
    "complement",
    "transpose",
    "complement_image",
    "transpose_image",
    "oracle_max_cells",
]

SYMBOLS = ("I", "GAMMA", "C", "T", "L", "J", "O")

DEFAULT_MAX_CELLS = 24
HARD_MAX_CELLS = 30
_ENV_MAX_CELLS = "MATRIXAVOID_ORACLE_MAX_CELLS"

_ALIASES = {
    "i": "I",
    "gamma": "GAMMA",
    "Γ": "GAMMA",  # Γ
    "γ": "GAMMA",  # γ
    "c": "C",
    "t": "T",
    "l": "L",
    "j": "J",
    "o": "O",
}


class SizeLimitExceeded(ValueError):
    """An oracle call would enumerate beyond the cell guard."""


def _lookup_symbol(text: str) -> str:
    try:
        return _ALIASES[str(text).strip().lower()]
    except KeyError:
        raise ValueError(f"unknown pattern class {text!r}") from None


class Pattern2x2(NamedTuple):
    """One concrete 2x2 (0,1)-matrix, entries (a b / c d)."""

    a: int
    b: int
    c: int
    d: int

    def row_swapped(self) -> "Pattern2x2":
        return Pattern2x2(self.c, self.d, self.a, self.b)

    def col_swapped(self) -> "Pattern2x2":
        return Pattern2x2(self.b, self.a, self.d, self.c)


def _orbit(seed: Pattern2x2) -> frozenset[Pattern2x2]:
    seen = {seed}
    frontier = [seed]
    while frontier:
        p = frontier.pop()
        for q in (p.row_swapped(), p.col_swapped()):
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return frozenset(seen)


@dataclass(frozen=True)
class PatternClass:
    symbol: str
    orbit: frozenset[Pattern2x2]


# Representatives: J all ones, O all zeros, I the diagonal pair, T both
# ones in one row, L both ones in one column, GAMMA exactly one zero,
# C exactly one one.  Orbit sizes 2,4,4,2,2,1,1 partition all 16 patterns.
CLASSES: dict[str, PatternClass] = {
    "I": PatternClass("I", _orbit(Pattern2x2(1, 0, 0, 1))),
    "GAMMA": PatternClass("GAMMA", _orbit(Pattern2x2(1, 1, 1, 0))),
    "C": PatternClass("C", _orbit(Pattern2x2(1, 0, 0, 0))),
    "T": PatternClass("T", _orbit(Pattern2x2(1, 1, 0, 0))),
    "L": PatternClass("L", _orbit(Pattern2x2(1, 0, 1, 0))),
    "J": PatternClass("J", _orbit(Pattern2x2(1, 1, 1, 1))),
    "O": PatternClass("O", _orbit(Pattern2x2(0, 0, 0, 0))),
}


def class_orbit(symbol: str) -> frozenset[Pattern2x2]:
    """Full orbit of the named class (aliases and any case accepted)."""
    return CLASSES[_lookup_symbol(symbol)].orbit


class AvoidanceSpec:
    """A nonempty set of pattern classes, stored canonically.

    Accepts any iterable of symbols or aliases; `parse` splits a
    comma-joined string like "gamma,c".  Canonical order follows SYMBOLS,
    so str(AvoidanceSpec.parse("c,GAMMA")) == "GAMMA,C".
    """

    __slots__ = ("symbols",)

    def __init__(self, symbols: Iterable[str]):
        canon = sorted({_lookup_symbol(s) for s in symbols}, key=SYMBOLS.index)
        if not canon:
            raise ValueError("avoidance spec must name at least one class")
        self.symbols = tuple(canon)

    @classmethod
    def parse(cls, text: str) -> "AvoidanceSpec":
        return cls(part for part in text.split(",") if part.strip())

    def canonical(self) -> str:
        return ",".join(self.symbols)

    def classes(self) -> tuple[PatternClass, ...]:
        return tuple(CLASSES[s] for s in self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, AvoidanceSpec) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"AvoidanceSpec({self.canonical()!r})"


_COMPLEMENT_IMAGE = {"I": "I", "GAMMA": "C", "C": "GAMMA", "T": "T", "L": "L", "J": "O", "O": "J"}
_TRANSPOSE_IMAGE = {"I": "I", "GAMMA": "GAMMA", "C": "C", "T": "L", "L": "T", "J": "J", "O": "O"}


def complement_image(spec: AvoidanceSpec) -> AvoidanceSpec:
    """The class set avoided by complements of spec-avoiding matrices."""
    return AvoidanceSpec(_COMPLEMENT_IMAGE[s] for s in spec.symbols)


def transpose_image(spec: AvoidanceSpec) -> AvoidanceSpec:
    """The class set avoided by transposes of spec-avoiding matrices."""
    return AvoidanceSpec(_TRANSPOSE_IMAGE[s] for s in spec.symbols)


@dataclass(frozen=True)
class BitMatrix:
    """A k x n (0,1)-matrix held as k row bitmasks (bit j = column j)."""

    rows: int
    cols: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.masks) != self.rows:
            raise ValueError("mask count does not match row count")
        top = (1 << self.cols) - 1
        for m in self.masks:
            if m < 0 or m & ~top:
                raise ValueError("row mask has bits beyond the last column")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from nested 0/1 entries, e.g. [[1,0,1],[0,0,1]]."""
        grid = [list(r) for r in rows]
        k = len(grid)
        n = len(grid[0]) if grid else 0
        masks = []
        for r in grid:
            if len(r) != n:
                raise ValueError("ragged rows")
            mask = 0
            for j, e in enumerate(r):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not a bit")
                mask |= e << j
            masks.append(mask)
        return cls(k, n, tuple(masks))

    def entry(self, i: int, j: int) -> int:
        return (self.masks[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]


def complement(m: BitMatrix) -> BitMatrix:
    """Entrywise 1 - M."""
    top = (1 << m.cols) - 1
    return BitMatrix(m.rows, m.cols, tuple(top ^ r for r in m.masks))


def transpose(m: BitMatrix) -> BitMatrix:
    """M with rows and columns exchanged."""
    masks = []
    for j in range(m.cols):
        v = 0
        for i in range(m.rows):
            v |= ((m.masks[i] >> j) & 1) << i
        masks.append(v)
    return BitMatrix(m.cols, m.rows, tuple(masks))


# --- column-type machinery ------------------------------------------------
#
# For a fixed (upper, lower) row pair, column j has type 2*upper_j + lower_j.
# Two columns p < q with types (u, v) spell the pattern (u1 v1 / u0 v0); an
# orbit is column-swap closed, so only the unordered type pair matters.


def _orbit_pairs(orbit: frozenset[Pattern2x2]) -> frozenset[tuple[int, int]]:
    pairs = set()
    for p in orbit:
        u = 2 * p.a + p.c
        v = 2 * p.b + p.d
        pairs.add((min(u, v), max(u, v)))
    return frozenset(pairs)


_CLASS_PAIRS = {s: _orbit_pairs(c.orbit) for s, c in CLASSES.items()}


@lru_cache(maxsize=None)
def _spec_pairs(symbols: tuple[str, ...]) -> tuple[tuple[int, int], ...]:
    merged: set[tuple[int, int]] = set()
    for s in symbols:
        merged |= _CLASS_PAIRS[s]
    return tuple(sorted(merged))


def _type_mask(x: int, y: int, full: int, t: int) -> int:
    if t == 0:
        return full & ~x & ~y
    if t == 1:
        return full & ~x & y
    if t == 2:
        return x & ~y
    return x & y


def _rows_hit(x: int, y: int, full: int, pairs) -> bool:
    """Do rows x (upper) and y (lower) realize a forbidden type pair?"""
    for u, v in pairs:
        mu = _type_mask(x, y, full, u)
        if u == v:
            if mu & (mu - 1):
                return True
        elif mu and _type_mask(x, y, full, v):
            return True
    return False


def contains_pattern(m: BitMatrix, p: Pattern2x2) -> bool:
    """Order-sensitive single-pattern test.

    True iff some rows i < j and columns p < q reproduce the four entries
    exactly.  Unlike contains_class this does not close over row or
    column exchange, so e.g. a matrix can contain (0 1 / 1 0) while
    avoiding (1 0 / 0 1).
    """
    u = 2 * p.a + p.c
    v = 2 * p.b + p.d
    full = (1 << m.cols) - 1
    for i, j in combinations(range(m.rows), 2):
        x, y = m.masks[i], m.masks[j]
        left = _type_mask(x, y, full, u)
        if not left:
            continue
        right = _type_mask(x, y, full, v)
        # a type-v column strictly right of the leftmost type-u column
        if right >> (left & -left).bit_length():
            return True
    return False


def contains_class(m: BitMatrix, cls: PatternClass | str) -> bool:
    """True iff two rows and two columns of m spell a pattern in the orbit."""
    if isinstance(cls, str):
        cls = CLASSES[_lookup_symbol(cls)]
    pairs = _spec_pairs((cls.symbol,))
    full = (1 << m.cols) - 1
    return any(
        _rows_hit(m.masks[i], m.masks[j], full, pairs)
        for i, j in combinations(range(m.rows), 2)
    )


def avoids(m: BitMatrix, spec: AvoidanceSpec) -> bool:
    """True iff m contains no class of spec."""
    pairs = _spec_pairs(spec.symbols)
    full = (1 << m.cols) - 1
    return not any(
        _rows_hit(m.masks[i], m.masks[j], full, pairs)
        for i, j in combinations(range(m.rows), 2)
    )


def oracle_max_cells() -> int:
    """Cell budget for the oracle: the environment override if set and
    parseable (hard-capped at 30), else 24."""
    raw = os.environ.get(_ENV_MAX_CELLS)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            return DEFAULT_MAX_CELLS
        if value >= 0:
            return min(value, HARD_MAX_CELLS)
    return DEFAULT_MAX_CELLS


def _check_guard(k: int, n: int, max_cells: int | None) -> None:
    if k < 0 or n < 0:
        raise ValueError("matrix dimensions must be nonnegative")
    limit = oracle_max_cells() if max_cells is None else min(max_cells, HARD_MAX_CELLS)
    if k * n > limit:
        raise SizeLimitExceeded(
            f"{k}x{n} grid has {k * n} cells; the oracle guard is {limit}"
        )


def count_avoiders(k: int, n: int, spec: AvoidanceSpec, max_cells: int | None = None) -> int:
    """Count the k x n matrices avoiding spec, by exhaustive enumeration.

    Walks the full space of row tuples depth first, pruning any prefix
    whose newest row already clashes with an earlier one.  Avoidance is a
    pairwise-rows property, so the pruned walk counts exactly the same
    matrices as a flat scan of all 2**(k*n) bitmasks (the flat scan lives
    on as count_avoiders_naive for cross-checking).

    Conventions: 1 at (0,0), 0 when exactly one dimension is 0.  Raises
    SizeLimitExceeded when k*n exceeds the guard (use a formula instead).
    """
    _check_guard(k, n, max_cells)
    if k == 0 or n == 0:
        return 1 if k == n else 0
    if k == 1 or n == 1:
        return 2 ** (k * n)

    pairs = _spec_pairs(spec.symbols)
    full = (1 << n) - 1
    nvals = 1 << n
    compat: dict[int, int] = {}

    def compat_mask(r: int) -> int:
        mask = compat.get(r)
        if mask is None:
            mask = 0
            for s in range(nvals):
                if not _rows_hit(r, s, full, pairs):
                    mask |= 1 << s
            compat[r] = mask
        return mask

    def walk(chosen: int, allowed: int) -> int:
        if chosen == k - 1:
            return allowed.bit_count()
        total = 0
        rest = allowed
        while rest:
            low = rest & -rest
            rest ^= low
            total += walk(chosen + 1, allowed & compat_mask(low.bit_length() - 1))
        return total

    return walk(0, (1 << nvals) - 1)


def count_avoiders_naive(k: int, n: int, spec: AvoidanceSpec, max_cells: int | None = None) -> int:
    """Reference enumerator: every bitmask, every submatrix, entry by entry.

    Much slower than count_avoiders; exists so the fast oracle has an
    independent implementation to be checked against.
    """
    _check_guard(k, n, max_cells)
    if k == 0 or n == 0:
        return 1 if k == n else 0
    bad: set[Pattern2x2] = set()
    for s in spec.symbols:
        bad |= CLASSES[s].orbit
    full = (1 << n) - 1
    row_pairs = list(combinations(range(k), 2))
    col_pairs = list(combinations(range(n), 2))
    total = 0
    for code in range(1 << (k * n)):
        masks = [(code >> (i * n)) & full for i in range(k)]
        hit = False
        for i, j in row_pairs:
            x, y = masks[i], masks[j]
            for p, q in col_pairs:
                if ((x >> p) & 1, (x >> q) & 1, (y >> p) & 1, (y >> q) & 1) in bad:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            total += 1
    return total
