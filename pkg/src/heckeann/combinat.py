"""
Compositions, partitions, dominance, and tableaux.

Enumeration orders are fixed so that everything downstream (matrices,
JSON output) is reproducible:

* `partitions_of(n)` lists partitions in descending lexicographic order,
  which refines dominance: if a strictly dominates b, a comes first.
* `tableaux(shape, kind)` fills rows top to bottom, choosing each row's
  entries as a combination in lexicographic order, so tableaux come out
  sorted by their row reading word.

>>> [tuple(p) for p in partitions_of(4)]
[(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
>>> [str(t) for t in tableaux(Partition((2, 2)), "standard")]
['1,2/3,4', '1,3/2,4']
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, combinations
from typing import Iterable, Sequence

__all__ = [
    "Composition", "Partition", "Tableau",
    "partitions_of", "compositions_of", "transpose", "dominates", "tableaux",
    "special_tableaux", "restrict_shape", "tableau_dominates",
    "tableau_dominates_properly", "pair_dominates", "parse_parts", "parse_tableau",
]


class Composition(tuple):
    """A finite sequence of nonnegative parts; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def sorted(self) -> "Partition":
        """The partition obtained by sorting the parts (lambda^+)."""
        return Partition(sorted((p for p in self if p), reverse=True))

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:])) and all(self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self))


class Partition(Composition):
    """A weakly decreasing sequence of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        obj = super().__new__(cls, parts)
        if not obj.is_partition():
            raise ValueError(f"{tuple(obj)} is not a partition")
        return obj

    def transpose(self) -> "Partition":
        return transpose(self)


def parse_parts(text: str) -> Composition:
    """Parse "2,2" or "3,1,0" into a composition (a Partition when sorted)."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise ValueError(f"cannot parse parts {text!r}") from None
    comp = Composition(parts)
    return Partition(comp) if comp.is_partition() else comp


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of n with positive parts, in lexicographic order."""
    if n == 0:
        return (Composition(()),)
    out = []
    for first in range(1, n + 1):
        for tail in compositions_of(n - first):
            out.append(Composition((first,) + tuple(tail)))
    return tuple(out)


def transpose(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for part in p if part > k) for k in range(p[0]))


def _prefix_sums(a: Sequence[int], length: int) -> list[int]:
    return list(accumulate(list(a) + [0] * (length - len(a))))


def dominates(a: Sequence[int], b: Sequence[int], strict: bool = False) -> bool:
    """a dominates b: every prefix sum of a is at least that of b."""
    if sum(a) != sum(b):
        raise ValueError(f"dominance needs compositions of the same n: {tuple(a)} vs {tuple(b)}")
    length = max(len(a), len(b))
    pa, pb = _prefix_sums(a, length), _prefix_sums(b, length)
    if any(x < y for x, y in zip(pa, pb)):
        return False
    return not strict or any(x > y for x, y in zip(pa, pb))


class Tableau:
    """
    A filling of a composition's diagram by 1..n, each used once.

    Rows may be empty (zero parts in the middle of a composition).
    """

    __slots__ = ("rows", "_shape", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"tableau entries must be 1..n exactly once: {rows}")
        self.rows = rows
        self._shape = Composition(len(r) for r in rows)
        self._hash = hash(rows)

    @property
    def shape(self) -> Composition:
        return self._shape

    @property
    def n(self) -> int:
        return self._shape.n

    @property
    def row_standard(self) -> bool:
        return all(all(a < b for a, b in zip(r, r[1:])) for r in self.rows)

    @property
    def standard(self) -> bool:
        if not self.row_standard or not self._shape.is_partition():
            return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    def row_of(self, k: int) -> int:
        """1-based row index containing entry k."""
        for i, row in enumerate(self.rows):
            if k in row:
                return i + 1
        raise ValueError(f"{k} is not an entry of {self}")

    def row_index(self) -> dict[int, int]:
        return {x: i + 1 for i, row in enumerate(self.rows) for x in row}

    def transpose(self) -> "Tableau":
        """Rows written as columns; defined for partition shapes."""
        if not self._shape.is_partition():
            raise ValueError("transpose needs a partition-shaped tableau")
        width = self._shape[0] if self._shape else 0
        return Tableau([row[k] for row in self.rows if len(row) > k] for k in range(width))

    def permute(self, images: Sequence[int]) -> "Tableau":
        """Replace each entry k by images[k-1] (the right action of a permutation)."""
        return Tableau([images[x - 1] for x in row] for row in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self._shape, self.reading_word()) < (other._shape, other.reading_word())

    def __str__(self):
        return "/".join(",".join(map(str, row)) for row in self.rows)

    def __repr__(self):
        return f"Tableau('{self}')"


def parse_tableau(text: str) -> Tableau:
    """Parse "1,3/2,4" (rows separated by '/', entries by ',')."""
    try:
        rows = [[int(x) for x in row.split(",") if x.strip()] for row in text.strip().split("/")]
        return Tableau(rows)
    except ValueError as exc:
        raise ValueError(f"cannot parse tableau {text!r}: {exc}") from None


@lru_cache(maxsize=None)
def _row_standard(shape: Composition) -> tuple[Tableau, ...]:
    n = shape.n
    out = []

    def fill(remaining: tuple[int, ...], row: int, acc: list):
        if row == len(shape):
            out.append(Tableau(acc))
            return
        for chosen in combinations(remaining, shape[row]):
            rest = tuple(x for x in remaining if x not in chosen)
            fill(rest, row + 1, acc + [chosen])

    fill(tuple(range(1, n + 1)), 0, [])
    return tuple(out)


def tableaux(shape: Sequence[int], kind: str = "standard") -> tuple[Tableau, ...]:
    shape = Composition(shape)
    if kind == "row_standard":
        return _row_standard(shape)
    if kind == "standard":
        if not shape.is_partition():
            raise ValueError(f"standard tableaux need a partition shape, got {tuple(shape)}")
        return _standard(Partition(shape))
    raise ValueError(f"unknown tableau kind {kind!r}")


@lru_cache(maxsize=None)
def _standard(shape: Partition) -> tuple[Tableau, ...]:
    return tuple(t for t in _row_standard(shape) if t.standard)


def special_tableaux(shape: Sequence[int]) -> tuple[Tableau, Tableau | None]:
    """
    (t^lambda, t_lambda): 1..n filled along rows, and down columns.

    The column-filled tableau needs a partition shape; for a proper
    composition it is returned as None.
    """
    shape = Composition(shape)
    it = iter(range(1, shape.n + 1))
    t_row = Tableau([[next(it) for _ in range(part)] for part in shape])
    if not shape.is_partition():
        return t_row, None
    rows: list[list[int]] = [[] for _ in shape]
    k = 1
    for col, height in enumerate(transpose(shape)):
        for r in range(height):
            rows[r].append(k)
            k += 1
    return t_row, Tableau(rows)


def restrict_shape(t: Tableau, j: int) -> Composition:
    """Shape of t with every entry larger than j removed."""
    return Composition(sum(1 for x in row if x <= j) for row in t.rows)


def tableau_dominates(s: Tableau, t: Tableau, strict: bool = False) -> bool:
    """
    Dominance of row-standard tableaux through their restrictions.

    The strict form asks for strict dominance of [s|j] over [t|j] at every
    j = 1..n; see `tableau_dominates_properly` for "dominates and differs".
    """
    if s.n != t.n:
        raise ValueError("tableau dominance needs tableaux with the same n")
    return all(dominates(restrict_shape(s, j), restrict_shape(t, j), strict)
               for j in range(1, s.n + 1))


def tableau_dominates_properly(s: Tableau, t: Tableau) -> bool:
    return s != t and tableau_dominates(s, t)


def pair_dominates(a: tuple[Tableau, Tableau], b: tuple[Tableau, Tableau]) -> bool:
    """(s, t) dominates (u, w) when s dominates u and t dominates w."""
    return tableau_dominates(a[0], b[0]) and tableau_dominates(a[1], b[1])
