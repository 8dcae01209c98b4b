"""
The Iwahori-Hecke algebra of S_n over a coefficient ring, in the T-basis.

Multiplication uses only the right rule

    T_w T_i = T_{w s_i}                    if l(w s_i) > l(w)
    T_w T_i = q T_{w s_i} + (q - 1) T_w    otherwise

(and its mirror image for left multiplication), with q = v^2.

>>> H = hecke_algebra(2, RingSpec.laurent())
>>> t1 = H.gen(1)
>>> print(t1 * t1)
v^2 + (v^2 - 1)*T[2,1]
>>> print(involution(t1, "sharp"))
(v^2 - 1) - T[2,1]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .combinat import Composition, Tableau, partitions_of, tableaux
from .linalg import ExactMatrix
from .rings import LaurentPoly, RingSpec
from .symgroup import Permutation, d_of, symmetric_group, to_cycles, young_subgroup

__all__ = [
    "HeckeAlgebra", "HeckeElt", "MurphyIndex", "hecke_algebra",
    "t_basis", "mul_gen", "mul_gen_left", "hecke_mul", "t_inverse", "involution",
    "x_y_element", "murphy_element", "murphy_indices", "murphy_change_of_basis",
    "murphy_inverse", "murphy_coordinates", "murphy_basis", "bilinear_form", "one_dim_rep",
]


class HeckeAlgebra:
    """H_R(S_n): the group tables plus the ring constants q, q - 1, 1/q."""

    def __init__(self, n: int, ring: RingSpec):
        self.n = n
        self.ring = ring
        self.group = symmetric_group(n)
        self.q = ring.q
        self.q_minus_1 = self.q - ring.one
        self.q_inv = self.q ** -1
        self._sharp: dict[int, HeckeElt] = {}
        self._dagger: dict[int, HeckeElt] = {}

    def __repr__(self):
        return f"HeckeAlgebra(n={self.n}, ring={self.ring})"

    def element(self, terms: dict) -> "HeckeElt":
        """Build an element from {permutation: coefficient}."""
        idx = self.group.index
        out = {}
        for w, c in terms.items():
            c = self._coerce(c)
            if c:
                k = idx[Permutation(w)]
                out[k] = out[k] + c if k in out else c
        return HeckeElt(self, {k: c for k, c in out.items() if c})

    def _coerce(self, c):
        if isinstance(c, int):
            return self.ring.from_int(c)
        if isinstance(c, LaurentPoly) and self.ring.tag != "laurent":
            return self.ring.specialize(c)
        return c

    def T(self, w: Sequence[int]) -> "HeckeElt":
        return HeckeElt(self, {self.group.index[Permutation(w)]: self.ring.one})

    def gen(self, i: int) -> "HeckeElt":
        if not 1 <= i < self.n:
            raise ValueError(f"T_{i} is not a generator of H(S_{self.n})")
        return HeckeElt(self, {self.group.right[self.group.identity][i]: self.ring.one})

    @property
    def one(self) -> "HeckeElt":
        return HeckeElt(self, {self.group.identity: self.ring.one})

    @property
    def zero(self) -> "HeckeElt":
        return HeckeElt(self, {})

    def from_vector(self, vec: Sequence) -> "HeckeElt":
        return HeckeElt(self, {k: c for k, c in enumerate(vec) if c})


@lru_cache(maxsize=None)
def hecke_algebra(n: int, ring: RingSpec) -> HeckeAlgebra:
    return HeckeAlgebra(n, ring)


def _add_into(acc: dict, k: int, c) -> None:
    if k in acc:
        s = acc[k] + c
        if s:
            acc[k] = s
        else:
            del acc[k]
    elif c:
        acc[k] = c


class HeckeElt:
    """
    A finite combination of the T_w. `terms` maps a group index (position in
    the lexicographic list of S_n) to a nonzero coefficient.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HeckeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    @property
    def n(self) -> int:
        return self.alg.n

    @property
    def ring(self) -> RingSpec:
        return self.alg.ring

    def _check(self, other: "HeckeElt"):
        if self.alg.n != other.alg.n or self.alg.ring != other.alg.ring:
            raise ValueError(f"context mismatch: {self.alg} vs {other.alg}")

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return HeckeElt(self.alg, acc)

    def __neg__(self):
        return HeckeElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = self.alg._coerce(c)
        if not c:
            return self.alg.zero
        return HeckeElt(self.alg, {k: x * c for k, x in self.terms.items() if x * c})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.alg.n == other.alg.n and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w) -> object:
        k = w if isinstance(w, int) else self.alg.group.index[Permutation(w)]
        return self.terms.get(k, self.alg.ring.zero)

    def items(self) -> list[tuple[Permutation, object]]:
        """(permutation, coefficient) pairs in lexicographic order."""
        elems = self.alg.group.elements
        return [(elems[k], self.terms[k]) for k in sorted(self.terms)]

    def vector(self) -> list:
        zero = self.alg.ring.zero
        return [self.terms.get(k, zero) for k in range(len(self.alg.group))]

    def specialize(self, ring: RingSpec) -> "HeckeElt":
        """Image under v -> ring.v of a Laurent-coefficient element."""
        if self.alg.ring.tag != "laurent":
            raise ValueError("only Laurent elements can be specialized")
        alg = hecke_algebra(self.alg.n, ring)
        out = {}
        for k, c in self.terms.items():
            x = ring.specialize(c)
            if x:
                out[k] = x
        return HeckeElt(alg, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        ident = self.alg.group.identity
        for k in sorted(self.terms, key=lambda k: (self.alg.group.lengths[k], k)):
            c = self.terms[k]
            w = self.alg.group.elements[k]
            cs = str(c)
            if k == ident:
                body = f"({cs})" if " " in cs else cs
            else:
                basis = "T[" + ",".join(map(str, w)) + "]"
                if c == 1:
                    body = basis
                elif c == -1:
                    body = "-" + basis
                else:
                    body = (f"({cs})" if " " in cs else cs) + "*" + basis
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"HeckeElt(n={self.alg.n}, {self})"

    def cycle_string(self) -> str:
        """
        Group-algebra style: "(1) - (12) + 2(123)".

        Meant for specializations at v = 1, where T_w is the group element w;
        coefficients must be integer-like. Terms are ordered by the number
        of transpositions needed for w, then by their cycle notation.
        """
        if not self.terms:
            return "0"
        terms = []
        for w, c in self.items():
            c = int(c) if not isinstance(c, LaurentPoly) else _laurent_int(c)
            if self.alg.ring.tag == "gfp":
                c = c if c <= self.alg.ring.p // 2 else c - self.alg.ring.p
            cyc = to_cycles(w)
            moves = len(w) - _cycle_count(w)
            terms.append((moves, cyc, c))
        out = ""
        for _, cyc, c in sorted(terms):
            body = ("" if abs(c) == 1 else str(abs(c))) + cyc
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> dict:
        ring = self.alg.ring
        return {
            "n": self.alg.n,
            "ring": ring.to_json(),
            "terms": [{"perm": list(w), "coeff": ring.element_to_json(c)} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HeckeElt":
        ring = RingSpec.from_json(data["ring"])
        alg = hecke_algebra(int(data["n"]), ring)
        return alg.element({tuple(t["perm"]): ring.element_from_json(t["coeff"]) for t in data["terms"]})


def _cycle_count(w: Sequence[int]) -> int:
    seen, count = set(), 0
    for start in range(1, len(w) + 1):
        if start not in seen:
            count += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = w[x - 1]
    return count


def _laurent_int(c: LaurentPoly) -> int:
    if c.min_exp != 0 or len(c.coeffs) > 1:
        raise ValueError(f"{c} is not an integer")
    return c.coeffs[0] if c.coeffs else 0


# -- products ---------------------------------------------------------------

def t_basis(w: Sequence[int], alg: HeckeAlgebra) -> HeckeElt:
    return alg.T(w)


def mul_gen(a: HeckeElt, i: int) -> HeckeElt:
    """a * T_i."""
    alg = a.alg
    g = alg.group
    if not 1 <= i < alg.n:
        raise ValueError(f"T_{i} is not a generator of H(S_{alg.n})")
    q, qm1 = alg.q, alg.q_minus_1
    right, lengths = g.right, g.lengths
    acc: dict = {}
    for k, c in a.terms.items():
        j = right[k][i]
        if lengths[j] > lengths[k]:
            _add_into(acc, j, c)
        else:
            _add_into(acc, j, q * c)
            _add_into(acc, k, qm1 * c)
    return HeckeElt(alg, acc)


def mul_gen_left(i: int, a: HeckeElt) -> HeckeElt:
    """T_i * a."""
    alg = a.alg
    g = alg.group
    if not 1 <= i < alg.n:
        raise ValueError(f"T_{i} is not a generator of H(S_{alg.n})")
    q, qm1 = alg.q, alg.q_minus_1
    left, lengths = g.left, g.lengths
    acc: dict = {}
    for k, c in a.terms.items():
        j = left[k][i]
        if lengths[j] > lengths[k]:
            _add_into(acc, j, c)
        else:
            _add_into(acc, j, q * c)
            _add_into(acc, k, qm1 * c)
    return HeckeElt(alg, acc)


def right_products(a: HeckeElt, targets: Optional[Iterable[int]] = None) -> dict[int, HeckeElt]:
    """{k: a * T_{w_k}} for the requested group indices (all of S_n by default)."""
    g = a.alg.group
    memo = {g.identity: a}

    def get(k):
        if k not in memo:
            prev, i = g.pred[k]
            memo[k] = mul_gen(get(prev), i)
        return memo[k]

    for k in (targets if targets is not None else g.by_length):
        get(k)
    return memo


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._check(b)
    if not a.terms or not b.terms:
        return a.alg.zero
    prods = right_products(a, b.terms)
    acc: dict = {}
    for k, c in b.terms.items():
        for j, x in prods[k].terms.items():
            _add_into(acc, j, x * c)
    return HeckeElt(a.alg, acc)


def left_mul_word(word: Sequence[int], a: HeckeElt) -> HeckeElt:
    """T_{i_1} ... T_{i_k} * a for the word (i_1, ..., i_k)."""
    for i in reversed(word):
        a = mul_gen_left(i, a)
    return a


def right_mul_word(a: HeckeElt, word: Sequence[int]) -> HeckeElt:
    for i in word:
        a = mul_gen(a, i)
    return a


def t_inverse(w: Sequence[int], alg: HeckeAlgebra) -> HeckeElt:
    """T_w^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1}, with T_i^{-1} = q^{-1}(T_i - q + 1)."""
    g = alg.group
    word = g.words[g.index[Permutation(w)]]
    x = alg.one
    for i in reversed(word):
        x = (mul_gen(x, i) - x.scale(alg.q_minus_1)).scale(alg.q_inv)
    return x


def _neg_q_power(alg: HeckeAlgebra, k: int):
    return (-alg.q) ** k


def _sharp_basis(alg: HeckeAlgebra, k: int) -> HeckeElt:
    # T_w -> (-q)^l(w) (T_{w^-1})^{-1}
    if k not in alg._sharp:
        g = alg.group
        alg._sharp[k] = t_inverse(g.elements[g.inverse[k]], alg).scale(_neg_q_power(alg, g.lengths[k]))
    return alg._sharp[k]


def _dagger_basis(alg: HeckeAlgebra, k: int) -> HeckeElt:
    # T_w -> (-q)^l(w) T_w^{-1}
    if k not in alg._dagger:
        g = alg.group
        alg._dagger[k] = t_inverse(g.elements[k], alg).scale(_neg_q_power(alg, g.lengths[k]))
    return alg._dagger[k]


def involution(a: HeckeElt, kind: str) -> HeckeElt:
    """The linear maps star (T_w -> T_{w^-1}), dagger and sharp."""
    alg = a.alg
    if kind == "star":
        inv = alg.group.inverse
        return HeckeElt(alg, {inv[k]: c for k, c in a.terms.items()})
    if kind == "sharp":
        images = _sharp_basis
    elif kind == "dagger":
        images = _dagger_basis
    else:
        raise ValueError(f"unknown involution {kind!r}")
    acc: dict = {}
    for k, c in a.terms.items():
        for j, x in images(alg, k).terms.items():
            _add_into(acc, j, x * c)
    return HeckeElt(alg, acc)


# -- x, y and the Murphy basis -------------------------------------------------

def x_y_element(shape: Sequence[int], kind: str, alg: HeckeAlgebra) -> HeckeElt:
    """x = sum of T_w over the Young subgroup; y = sum of (-q)^{-l(w)} T_w."""
    shape = Composition(shape)
    if shape.n != alg.n:
        raise ValueError(f"{tuple(shape)} is not a composition of {alg.n}")
    g = alg.group
    terms = {}
    for w in young_subgroup(shape):
        k = g.index[w]
        if kind == "x":
            terms[k] = alg.ring.one
        elif kind == "y":
            terms[k] = (-alg.q_inv) ** g.lengths[k]
        else:
            raise ValueError(f"unknown kind {kind!r}")
    return HeckeElt(alg, terms)


@dataclass(frozen=True, order=False)
class MurphyIndex:
    """A pair of tableaux (s, t) of a common shape."""

    shape: Composition
    s: Tableau
    t: Tableau

    def __post_init__(self):
        if self.s.shape != self.shape or self.t.shape != self.shape:
            raise ValueError(f"tableaux {self.s}, {self.t} do not have shape {tuple(self.shape)}")

    @classmethod
    def of(cls, s: Tableau, t: Tableau) -> "MurphyIndex":
        return cls(s.shape, s, t)

    def __str__(self):
        return f"({self.s} | {self.t})"


def murphy_element(idx: MurphyIndex, kind: str, alg: HeckeAlgebra) -> HeckeElt:
    """
    x_st = T_{d(s)}^* x_shape T_{d(t)} (or the y version, or x_st^sharp).

    s and t need only be row-standard, of any composition shape.
    """
    base = "y" if kind == "y" else "x"
    if kind not in ("x", "y", "x_sharp"):
        raise ValueError(f"unknown Murphy element kind {kind!r}")
    g = alg.group
    core = x_y_element(idx.shape, base, alg)
    ds, dt = d_of(idx.s), d_of(idx.t)
    # T_{d(s)}^* = T_{d(s)^{-1}}
    left_word = g.words[g.index[ds.inverse()]]
    elt = right_mul_word(left_mul_word(left_word, core), g.words[g.index[dt]])
    if kind == "x_sharp":
        elt = involution(elt, "sharp")
    return elt


@lru_cache(maxsize=None)
def murphy_indices(n: int) -> tuple[MurphyIndex, ...]:
    """Standard pairs (s, t), partitions in `partitions_of` order, pairs in tableau order."""
    out = []
    for lam in partitions_of(n):
        tabs = tableaux(lam, "standard")
        for s in tabs:
            for t in tabs:
                out.append(MurphyIndex(lam, s, t))
    return tuple(out)


_LAURENT = RingSpec.laurent()


@lru_cache(maxsize=None)
def _murphy_rows(n: int, kind: str) -> tuple[tuple, ...]:
    alg = hecke_algebra(n, _LAURENT)
    return tuple(tuple(murphy_element(idx, kind, alg).vector()) for idx in murphy_indices(n))


def murphy_basis(n: int, ring: RingSpec, kind: str = "x") -> dict[MurphyIndex, HeckeElt]:
    """All Murphy elements of the given kind, keyed by index, over `ring`."""
    alg = hecke_algebra(n, _LAURENT)
    out = {}
    for idx, row in zip(murphy_indices(n), _murphy_rows(n, kind)):
        elt = HeckeElt(alg, {k: c for k, c in enumerate(row) if c})
        out[idx] = elt if ring.tag == "laurent" else elt.specialize(ring)
    return out


def murphy_change_of_basis(n: int, ring: RingSpec, kind: str = "x") -> ExactMatrix:
    """
    Rows: the Murphy elements in `murphy_indices` order; columns: T_w in
    lexicographic order of w. Computed over Z[v, v^-1] and specialized.
    """
    rows = _murphy_rows(n, kind)
    g = symmetric_group(n)
    mat = ExactMatrix(rows, _LAURENT, murphy_indices(n), g.elements, ncols=len(g))
    return mat if ring.tag == "laurent" else mat.specialize(ring)


@lru_cache(maxsize=None)
def _murphy_inverse_laurent(n: int, kind: str) -> ExactMatrix:
    return murphy_change_of_basis(n, _LAURENT, kind).inverse()


def murphy_inverse(n: int, ring: RingSpec, kind: str = "x") -> ExactMatrix:
    """
    Inverse of the change-of-basis matrix: row w holds the Murphy
    coordinates of T_w. Its determinant is a unit, so the inverse is
    integral and specializes to every ring.
    """
    inv = _murphy_inverse_laurent(n, kind)
    return inv if ring.tag == "laurent" else _specialized_inverse(n, ring, kind)


@lru_cache(maxsize=None)
def _specialized_inverse(n: int, ring: RingSpec, kind: str) -> ExactMatrix:
    return _murphy_inverse_laurent(n, kind).specialize(ring)


def murphy_coordinates(h: HeckeElt, kind: str = "x") -> list:
    """Coefficients of h on the Murphy basis, in `murphy_indices` order."""
    inv = murphy_inverse(h.n, h.ring, kind)
    return inv.vector_matrix(h.vector())


def bilinear_form(a: HeckeElt, b: HeckeElt, method: str = "trace"):
    """
    The coefficient of T_id in a b^*.

    "trace" uses coefficient(T_id, T_x T_y) = q^l(x) when y = x^{-1} and 0
    otherwise, so the form is sum_w a_w b_w q^l(w); "product" multiplies out.
    """
    a._check(b)
    alg = a.alg
    if method == "product":
        return hecke_mul(a, involution(b, "star")).coeff(alg.group.identity)
    if method != "trace":
        raise ValueError(f"unknown method {method!r}")
    acc = alg.ring.zero
    lengths = alg.group.lengths
    for k, c in a.terms.items():
        d = b.terms.get(k)
        if d:
            acc = acc + c * d * alg.q ** lengths[k]
    return acc


def one_dim_rep(w, kind: str, alg: HeckeAlgebra):
    """Trivial rep T_w -> q^l(w), sign rep T_w -> (-1)^l(w); extends linearly to elements."""
    if isinstance(w, HeckeElt):
        acc = alg.ring.zero
        for k, c in w.terms.items():
            acc = acc + c * one_dim_rep(alg.group.elements[k], kind, alg)
        return acc
    ell = Permutation(w).length()
    if kind == "trivial":
        return alg.q ** ell
    if kind == "sign":
        return alg.ring.from_int((-1) ** ell)
    raise ValueError(f"unknown one-dimensional representation {kind!r}")
