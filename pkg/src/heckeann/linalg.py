"""
Exact dense linear algebra by fraction-free (Bareiss) elimination.

All routines work over any `RingSpec` ring. Over Z[v, v^-1] ranks and
kernels are those of the fraction field Q(v); vectors come back with
Laurent entries, cleared of denominators.

Vectors are rows and matrices act on the right where that matters
(`vector_matrix`), but `kernel` is the usual right null space
{x : A x = 0}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .rings import LaurentPoly, RationalFunction, RingSpec

__all__ = [
    "ExactMatrix", "bareiss_rref", "rank", "kernel", "determinant", "inverse",
    "row_basis", "in_span", "span_equal",
]

# evaluation point for choosing candidate pivot rows over Z[v, v^-1]
_PRIME = (1 << 61) - 1
_PROBE_V = 982_451_653

_LAURENT = RingSpec.laurent()


def _size(x) -> tuple:
    if isinstance(x, LaurentPoly):
        return x.size()
    if isinstance(x, Fraction):
        return (x.numerator.bit_length() + x.denominator.bit_length(),)
    if isinstance(x, int):
        return (abs(x).bit_length(),)
    return (0,)


def bareiss_rref(rows: Sequence[Sequence], ring: RingSpec):
    """
    Fraction-free Gauss-Jordan elimination.

    Returns (R, pivots, d, sign): every pivot row k of R has the entry d in
    column pivots[k] and zeros in the other pivot columns; rows past
    len(pivots) are zero. For a square nonsingular input, sign * d is the
    determinant.
    """
    R = [list(r) for r in rows]
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    one = ring.one
    exquo = ring.exquo
    prev = one
    pivots: list[int] = []
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            x = R[i][c]
            if x:
                key = _size(x)
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        i = best[1]
        if i != r:
            R[r], R[i] = R[i], R[r]
            sign = -sign
        prow = R[r]
        p = prow[c]
        live = {j for j in range(ncols) if prow[j]}
        for i in range(nrows):
            if i == r:
                continue
            row = R[i]
            a = row[c]
            if not a:
                if p != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = exquo(p * row[j], prev)
                continue
            for j in range(ncols):
                x = row[j]
                if j in live:
                    row[j] = exquo(p * x - a * prow[j], prev)
                elif x:
                    row[j] = exquo(p * x, prev)
        prev = p
        pivots.append(c)
        r += 1
    return R, pivots, prev, sign


def _normalize_laurent_vector(vec: list) -> list:
    nz = [x for x in vec if x]
    if not nz:
        return vec
    shift = min(x.min_exp for x in nz)
    content = reduce(gcd, (x.content() for x in nz), 0)
    first = nz[0]
    if first.coeffs[-1] < 0:
        content = -content
    return [LaurentPoly([c // content for c in x.coeffs], x.min_exp - shift) if x else x for x in vec]


def _kernel_from_rref(R, pivots, d, ncols, ring) -> list[list]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    zero = ring.zero
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = d
        for k, c in enumerate(pivots):
            vec[c] = -R[k][f]
        basis.append(vec)
    return basis


def _to_laurent_rows(rows, ring: RingSpec):
    if ring.tag == "laurent":
        return [list(r) for r in rows]
    if ring.tag != "qv":
        raise TypeError("expected a Laurent or Q(v) matrix")
    out = []
    for r in rows:
        den = LaurentPoly.one()
        for x in r:
            if x.den != 1:
                den = den * x.den.exquo(_gcd_laurent(den, x.den))
        out.append([(x.num * den).exquo(x.den) for x in r])
    return out


def _gcd_laurent(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    g = RationalFunction(a, b).den
    return b.exquo(g)


def _dot(row, vec):
    acc = None
    for x, y in zip(row, vec):
        if x and y:
            acc = x * y if acc is None else acc + x * y
    return acc


def _probe_independent(rows: list[list[LaurentPoly]], ncols: int, start: Sequence[int] = ()) -> list[int]:
    """Indices of rows independent modulo _PRIME at v = _PROBE_V."""
    basis: dict[int, list[int]] = {}
    chosen = []
    order = list(start) + [i for i in range(len(rows)) if i not in set(start)]
    for i in order:
        vec = [x.eval_mod(_PROBE_V, _PRIME) if x else 0 for x in rows[i]]
        for c, b in basis.items():
            if vec[c]:
                f = vec[c]
                vec = [(x - f * y) % _PRIME for x, y in zip(vec, b)]
        lead = next((c for c, x in enumerate(vec) if x), None)
        if lead is None:
            continue
        inv = pow(vec[lead], -1, _PRIME)
        vec = [x * inv % _PRIME for x in vec]
        for c, b in basis.items():
            if b[lead]:
                f = b[lead]
                basis[c] = [(x - f * y) % _PRIME for x, y in zip(b, vec)]
        basis[lead] = vec
        chosen.append(i)
        if len(chosen) == ncols:
            break
    return chosen


def _laurent_row_basis(rows: list[list[LaurentPoly]], ncols: int):
    """
    (indices of a row basis, right kernel) over Q(v), exactly.

    Candidate rows come from a modular probe; the kernel of those rows is
    computed by Bareiss and then checked against every row exactly. A row
    that fails the check joins the candidates and the solve repeats.
    """
    chosen = _probe_independent(rows, ncols)
    while True:
        sub = [rows[i] for i in chosen]
        if sub:
            R, pivots, d, _ = bareiss_rref(sub, _LAURENT)
            ker = _kernel_from_rref(R, pivots, d, ncols, _LAURENT)
            if len(pivots) < len(chosen):
                # probe rank exceeded the true rank; cannot happen for a prime probe
                raise ArithmeticError("inconsistent rank probe")
        else:
            ker = [[LaurentPoly.monomial(int(i == j), 0) for j in range(ncols)] for i in range(ncols)]
        ker = [_normalize_laurent_vector(k) for k in ker]
        bad = None
        taken = set(chosen)
        for i, row in enumerate(rows):
            if i in taken:
                continue
            if any(_dot(row, k) for k in ker):
                bad = i
                break
        if bad is None:
            return chosen, ker
        chosen = chosen + [bad]


def row_basis(rows: Sequence[Sequence], ring: RingSpec) -> list[int]:
    """Indices of a maximal linearly independent subset of the rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    if ring.tag in ("laurent", "qv"):
        chosen, _ = _laurent_row_basis(_to_laurent_rows(rows, ring), ncols)
        return sorted(chosen)
    # pivot columns of the transpose are independent rows
    _, pivots, _, _ = bareiss_rref([list(c) for c in zip(*rows)], ring)
    return pivots


def rank(rows: Sequence[Sequence], ring: RingSpec) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if ring.tag in ("laurent", "qv"):
        chosen, _ = _laurent_row_basis(_to_laurent_rows(rows, ring), len(rows[0]))
        return len(chosen)
    _, pivots, _, _ = bareiss_rref(rows, ring)
    return len(pivots)


def kernel(rows: Sequence[Sequence], ring: RingSpec, ncols: Optional[int] = None) -> list[list]:
    """
    Basis of the right null space {x : A x = 0}.

    Over a field ring the vectors have entries in that field. Over
    Z[v, v^-1] the kernel is taken over Q(v) and each vector is scaled to a
    primitive Laurent vector; over Q(v) the same vectors are returned as
    RationalFunction entries.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [[ring.from_int(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    if ring.tag in ("laurent", "qv"):
        _, ker = _laurent_row_basis(_to_laurent_rows(rows, ring), ncols)
        if ring.tag == "qv":
            return [[RationalFunction(x) for x in vec] for vec in ker]
        return ker
    R, pivots, d, _ = bareiss_rref(rows, ring)
    ker = _kernel_from_rref(R, pivots, d, ncols, ring)
    # over a field, scale so the free coordinate is 1
    return [[x / d for x in vec] for vec in ker]


def determinant(rows: Sequence[Sequence], ring: RingSpec):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ring.one
    R, pivots, d, sign = bareiss_rref(rows, ring)
    if len(pivots) < n:
        return ring.zero
    return d if sign > 0 else -d


def inverse(rows: Sequence[Sequence], ring: RingSpec):
    """Inverse matrix; over Z[v, v^-1] the determinant must be a unit."""
    n = len(rows)
    zero, one = ring.zero, ring.one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    R, pivots, d, _ = bareiss_rref(aug, ring)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [[ring.exquo(x, d) for x in R[k][n:]] for k in range(n)]


def in_span(vectors: Sequence[Sequence], target: Sequence, ring: RingSpec) -> bool:
    """True when target is a linear combination of vectors (over the fraction field)."""
    return rank(list(vectors) + [list(target)], ring) == rank(vectors, ring) if vectors else not any(target)


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence], ring: RingSpec) -> bool:
    ra, rb = rank(a, ring) if a else 0, rank(b, ring) if b else 0
    if ra != rb:
        return False
    if not a:
        return True
    return rank(list(a) + list(b), ring) == ra


class ExactMatrix:
    """
    A dense matrix over a `RingSpec` ring, with optional row/column labels.

    Labels are whatever indexes the basis (permutations, tableaux, tensor
    indices); they travel with the matrix into JSON output.
    """

    def __init__(self, rows: Sequence[Sequence], ring: RingSpec,
                 row_labels: Optional[Sequence] = None, col_labels: Optional[Sequence] = None,
                 ncols: Optional[int] = None):
        self.rows = [list(r) for r in rows]
        self.ring = ring
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def identity(cls, n: int, ring: RingSpec, labels=None) -> "ExactMatrix":
        zero, one = ring.zero, ring.one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring, labels, labels)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring: RingSpec) -> "ExactMatrix":
        return cls([[ring.zero] * ncols for _ in range(nrows)], ring, ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.ring.zero
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for col in cols:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.ring, self.row_labels, other.col_labels, ncols=other.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)],
                           self.ring, self.row_labels, self.col_labels, ncols=self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)],
                           self.ring, self.row_labels, self.col_labels, ncols=self.ncols)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in r] for r in self.rows], self.ring,
                           self.row_labels, self.col_labels, ncols=self.ncols)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for a, b in zip(self.rows, other.rows) for x, y in zip(a, b))

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], self.ring,
                           self.col_labels, self.row_labels, ncols=self.nrows)

    def specialize(self, ring: RingSpec) -> "ExactMatrix":
        if self.ring.tag != "laurent":
            raise ValueError("only Laurent matrices can be specialized")
        return ExactMatrix([[ring.specialize(x) for x in r] for r in self.rows], ring,
                           self.row_labels, self.col_labels, ncols=self.ncols)

    def vector_matrix(self, vec: Sequence) -> list:
        """The row vector vec times this matrix."""
        zero = self.ring.zero
        out = [zero] * self.ncols
        for x, r in zip(vec, self.rows):
            if x:
                for j, y in enumerate(r):
                    if y:
                        out[j] = out[j] + x * y
        return out

    def rank(self) -> int:
        return rank(self.rows, self.ring)

    def kernel(self) -> list[list]:
        return kernel(self.rows, self.ring, self.ncols)

    def det(self):
        return determinant(self.rows, self.ring)

    def inverse(self) -> "ExactMatrix":
        return ExactMatrix(inverse(self.rows, self.ring), self.ring, self.col_labels, self.row_labels)

    def to_json(self) -> dict:
        out = {
            "ring": self.ring.to_json(),
            "shape": [self.nrows, self.ncols],
            "entries": [[self.ring.element_to_json(x) for x in r] for r in self.rows],
        }
        if self.row_labels is not None:
            out["row_labels"] = [str(x) for x in self.row_labels]
        if self.col_labels is not None:
            out["col_labels"] = [str(x) for x in self.col_labels]
        return out

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.ring})"
