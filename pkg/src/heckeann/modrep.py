"""
Permutation modules, cell ideals, and annihilators.

Two independent routes meet here. The closed form writes the annihilator
of M^lambda = x_lambda H as the span of the sharp-twisted Murphy elements
whose shape is not dominated by the transpose of lambda. The kernel oracle
solves x_{lambda t} a = 0 for all row-standard t by exact linear algebra on
T-coordinates, with no reference to the Murphy basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Callable, Optional, Sequence

from .combinat import (Composition, Partition, Tableau, dominates, partitions_of,
                       special_tableaux, tableaux)
from .hecke import (HeckeAlgebra, HeckeElt, MurphyIndex, hecke_algebra, hecke_mul,
                    murphy_basis, murphy_coordinates, murphy_element,
                    murphy_indices, right_products, x_y_element)
from .linalg import ExactMatrix, in_span, kernel, rank, row_basis, span_equal
from .rings import RingSpec
from .symgroup import d_of, symmetric_group, w_lambda

__all__ = [
    "ActionMatrix", "IdealBasis", "AnnihilatorReport", "PermutationModule",
    "perm_module_gen_action", "perm_module_action", "cell_ideal_basis",
    "cell_module_structure", "specht_ideal", "annihilator_closed", "kernel_basis",
    "annihilator_kernel", "verify_annihilator", "hecke_semisimple", "is_semisimple",
    "annihilator_equalities", "twisted_annihilator", "verify_twisted_annihilator",
    "quotient_cellular_rank", "semisimple_kernel_rank", "counterexample_report",
    "DEFAULT_SPECIALIZATIONS",
]

LAURENT = RingSpec.laurent()
QV = RingSpec.qv()

DEFAULT_SPECIALIZATIONS = (
    RingSpec.rationals(1), RingSpec.rationals(2),
    RingSpec.gfp(2, 1), RingSpec.gfp(3, 1), RingSpec.gfp(5, 1),
)


# -- value types -------------------------------------------------------------

@dataclass(frozen=True)
class ActionMatrix:
    """Matrix of a right action: basis vectors are rows, the matrix acts on the right."""

    row_basis: tuple
    col_basis: tuple
    matrix: ExactMatrix

    def to_json(self) -> dict:
        out = self.matrix.to_json()
        out["row_labels"] = [str(x) for x in self.row_basis]
        out["col_labels"] = [str(x) for x in self.col_basis]
        return out


@dataclass(frozen=True)
class IdealBasis:
    description: str
    elements: tuple
    labels: tuple = ()

    def __len__(self):
        return len(self.elements)

    def vectors(self) -> list[list]:
        return [e.vector() for e in self.elements]

    def rank(self) -> int:
        if not self.elements:
            return 0
        return rank(self.vectors(), self.elements[0].ring)

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "labels": [str(x) for x in self.labels],
            "elements": [e.to_json() for e in self.elements],
        }


@dataclass
class AnnihilatorReport:
    lam: Partition
    ring: RingSpec
    closed_rank: int
    kernel_rank: int
    containment_ok: bool
    equality_ok: bool
    generators: tuple = ()
    specializations: list = field(default_factory=list)
    witness: Optional[HeckeElt] = None

    def to_json(self, with_generators: bool = False) -> dict:
        out = {
            "lambda": list(self.lam),
            "ring": self.ring.to_json(),
            "closed_rank": self.closed_rank,
            "kernel_rank": self.kernel_rank,
            "containment": self.containment_ok,
            "equality": self.equality_ok,
        }
        if self.specializations:
            out["specializations"] = self.specializations
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if with_generators:
            out["generators"] = [g.to_json() for g in self.generators]
        return out


# -- permutation modules -------------------------------------------------------

class PermutationModule:
    """
    M^shape = x_shape H with basis x_{shape, t}, t row-standard, in
    `tableaux(shape, "row_standard")` order.
    """

    def __init__(self, shape: Sequence[int], ring: RingSpec):
        self.shape = Composition(shape)
        self.n = self.shape.n
        self.ring = ring
        self.basis = tableaux(self.shape, "row_standard")
        self.index = {t: k for k, t in enumerate(self.basis)}
        self.group = symmetric_group(self.n)
        q = ring.q
        qm1 = q - ring.one
        self._gen: list = [None]
        for i in range(1, self.n):
            images = []
            for t in self.basis:
                rows = t.row_index()
                a, b = rows[i], rows[i + 1]
                if a == b:
                    images.append({self.index[t]: q})
                    continue
                swap = list(range(1, self.n + 1))
                swap[i - 1], swap[i] = i + 1, i
                u = self.index[t.permute(swap)]
                if a < b:
                    images.append({u: ring.one})
                else:
                    images.append({u: q, self.index[t]: qm1})
            self._gen.append(images)
        self._orbit: dict[int, list] = {}

    def __len__(self):
        return len(self.basis)

    def apply_gen(self, vec: dict, i: int) -> dict:
        out: dict = {}
        for k, c in vec.items():
            for j, x in self._gen[i][k].items():
                s = out.get(j)
                s = x * c if s is None else s + x * c
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
        return out

    def _translates(self, k: int) -> list:
        """e_k T_w for every w, indexed by group index."""
        if k not in self._orbit:
            g = self.group
            table: list = [None] * len(g)
            table[g.identity] = {k: self.ring.one}
            for j in g.by_length:
                if j == g.identity:
                    continue
                prev, i = g.pred[j]
                table[j] = self.apply_gen(table[prev], i)
            self._orbit[k] = table
        return self._orbit[k]

    def act(self, vec: dict, h: HeckeElt) -> dict:
        """vec * h for a sparse coordinate vector {basis index: coeff}."""
        out: dict = {}
        for k, c in vec.items():
            table = self._translates(k)
            for w, hw in h.terms.items():
                for j, x in table[w].items():
                    s = out.get(j)
                    s = x * c * hw if s is None else s + x * c * hw
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        return out

    def gen_matrix(self, i: int) -> ExactMatrix:
        zero = self.ring.zero
        rows = [[img.get(j, zero) for j in range(len(self))] for img in self._gen[i]]
        return ExactMatrix(rows, self.ring, self.basis, self.basis, ncols=len(self))

    def action_matrix(self, h: HeckeElt) -> ExactMatrix:
        zero = self.ring.zero
        rows = []
        for k in range(len(self)):
            img = self.act({k: self.ring.one}, h)
            rows.append([img.get(j, zero) for j in range(len(self))])
        return ExactMatrix(rows, self.ring, self.basis, self.basis, ncols=len(self))

    def basis_element(self, t: Tableau, alg: Optional[HeckeAlgebra] = None) -> HeckeElt:
        """x_{shape, t} = x_shape T_{d(t)} as an element of H."""
        alg = alg or hecke_algebra(self.n, self.ring)
        t_row, _ = special_tableaux(self.shape)
        return murphy_element(MurphyIndex(self.shape, t_row, t), "x", alg)

    def coordinates(self, m: HeckeElt) -> list:
        """
        Coordinates of m in M^shape on the x_{shape, u}: the coefficient of
        T_{d(u)} in m, since d(u) is the shortest element of its coset.
        """
        return [m.coeff(d_of(u)) for u in self.basis]


@lru_cache(maxsize=None)
def permutation_module(shape: Composition, ring: RingSpec) -> PermutationModule:
    return PermutationModule(shape, ring)


def perm_module_gen_action(shape: Sequence[int], i: int, ring: RingSpec) -> ActionMatrix:
    """Right multiplication by T_i on the x_{shape, t} basis."""
    mod = permutation_module(Composition(shape), ring)
    if not 1 <= i < mod.n:
        raise ValueError(f"T_{i} is not a generator of H(S_{mod.n})")
    return ActionMatrix(mod.basis, mod.basis, mod.gen_matrix(i))


def perm_module_action(shape: Sequence[int], h: HeckeElt) -> ActionMatrix:
    mod = permutation_module(Composition(shape), h.ring)
    return ActionMatrix(mod.basis, mod.basis, mod.action_matrix(h))


# -- cell ideals ---------------------------------------------------------------

def _check_closed(shapes: set, n: int) -> None:
    for mu in shapes:
        for nu in partitions_of(n):
            if dominates(nu, mu) and nu not in shapes:
                raise ValueError(
                    f"shape set is not closed upward under dominance: {tuple(nu)} dominates "
                    f"{tuple(mu)} but is missing")


def cell_ideal_basis(pred: Callable[[Partition], bool], n: int, ring: RingSpec,
                     sharp: bool = False, description: str = "cell_ideal") -> IdealBasis:
    """All x_st (or x_st sharp) whose shape satisfies pred; pred must pick a dominance-closed set."""
    shapes = {mu for mu in partitions_of(n) if pred(mu)}
    _check_closed(shapes, n)
    elts = murphy_basis(n, ring, "x_sharp" if sharp else "x")
    chosen = [idx for idx in murphy_indices(n) if idx.shape in shapes]
    return IdealBasis(description, tuple(elts[idx] for idx in chosen), tuple(chosen))


def ideal_shapes_not_below(lam: Partition) -> Callable[[Partition], bool]:
    """Predicate for shapes mu with mu not dominated by the transpose of lam."""
    conj = Partition(lam).transpose()
    return lambda mu: not dominates(conj, mu)


def cell_module_structure(lam: Sequence[int], h: HeckeElt, s: Optional[Tableau] = None) -> ActionMatrix:
    """
    The matrix r_h(t, u) on Tab(lam) with x_st h = sum_u r_h(t, u) x_su modulo
    the span of Murphy elements of strictly more dominant shape. Any
    coordinate outside that pattern raises, since it would contradict the
    cellular structure.
    """
    lam = Partition(lam)
    alg = h.alg
    tabs = tableaux(lam, "standard")
    s = s or tabs[0]
    indices = murphy_indices(alg.n)
    pos = {idx: k for k, idx in enumerate(indices)}
    zero = alg.ring.zero
    rows = []
    for t in tabs:
        prod = hecke_mul(murphy_element(MurphyIndex(lam, s, t), "x", alg), h)
        coords = murphy_coordinates(prod)
        for idx, c in zip(indices, coords):
            if not c:
                continue
            if idx.shape == lam and idx.s != s:
                raise ArithmeticError(f"x_st h has a coordinate on {idx} with a different s")
            if idx.shape != lam and not dominates(idx.shape, lam, strict=True):
                raise ArithmeticError(f"x_st h leaves the ideal of shapes dominating {tuple(lam)}")
        rows.append([coords[pos[MurphyIndex(lam, s, u)]] or zero for u in tabs])
    return ActionMatrix(tabs, tabs, ExactMatrix(rows, alg.ring, tabs, tabs, ncols=len(tabs)))


def specht_ideal(lam: Sequence[int], ring: RingSpec) -> IdealBasis:
    """A basis of x_lam T_{w_lam} y_{lam'} H, chosen among its right translates by T_w."""
    lam = Partition(lam)
    n = lam.n
    alg = hecke_algebra(n, ring)
    gen = hecke_mul(hecke_mul(x_y_element(lam, "x", alg), alg.T(w_lambda(lam))),
                    x_y_element(lam.transpose(), "y", alg))
    translates = right_products(gen)
    g = symmetric_group(n)
    elts = [translates[k] for k in range(len(g))]
    keep = row_basis([e.vector() for e in elts], ring)
    return IdealBasis(f"specht({lam})", tuple(elts[k] for k in keep),
                      tuple(g.elements[k] for k in keep))


# -- annihilators ----------------------------------------------------------------

def annihilator_closed(lam: Sequence[int], ring: RingSpec) -> IdealBasis:
    lam = Partition(lam)
    return cell_ideal_basis(ideal_shapes_not_below(lam), lam.n, ring, sharp=True,
                            description=f"annihilator_closed({lam})")


def twisted_annihilator(lam: Sequence[int], ring: RingSpec) -> IdealBasis:
    """Sharp image of the closed annihilator: the plain x_st of the same shapes."""
    lam = Partition(lam)
    return cell_ideal_basis(ideal_shapes_not_below(lam), lam.n, ring, sharp=False,
                            description=f"twisted_annihilator({lam})")


def verify_twisted_annihilator(lam: Sequence[int], ring: RingSpec) -> bool:
    """Every twisted generator kills every y_lam T_{d(t)}, t row-standard."""
    lam = Partition(lam)
    alg = hecke_algebra(lam.n, ring)
    t_row, _ = special_tableaux(lam)
    gens = twisted_annihilator(lam, ring).elements
    for t in tableaux(lam, "row_standard"):
        y = murphy_element(MurphyIndex(lam, t_row, t), "y", alg)
        if any(hecke_mul(y, g) for g in gens):
            return False
    return True


def kernel_basis(mat: ExactMatrix) -> list[list]:
    """Right null space of a matrix over a field, by fraction-free elimination."""
    if not mat.ring.is_field:
        raise ValueError(f"kernel_basis needs a field, got {mat.ring}")
    return kernel(mat.rows, mat.ring, mat.ncols)


@lru_cache(maxsize=None)
def _annihilator_system(lam: Composition) -> tuple[tuple, ...]:
    """
    Rows of the linear system x_{lam t} a = 0 over Z[v, v^-1]: for each t and
    each coset representative d(u), the coefficient of T_{d(u)} in
    x_{lam t} T_w as w runs over S_n.
    """
    n = lam.n
    alg = hecke_algebra(n, LAURENT)
    g = symmetric_group(n)
    reps = [g.index[d_of(u)] for u in tableaux(lam, "row_standard")]
    t_row, _ = special_tableaux(lam)
    zero = LAURENT.zero
    rows = set()
    for t in tableaux(lam, "row_standard"):
        prods = right_products(murphy_element(MurphyIndex(lam, t_row, t), "x", alg))
        for r in reps:
            row = tuple(prods[w].terms.get(r, zero) for w in range(len(g)))
            if any(row):
                rows.add(row)
    return tuple(sorted(rows, key=lambda r: [str(x) for x in r]))


def _system_over(rows: Sequence[Sequence], ring: RingSpec) -> list[list]:
    if ring.tag == "laurent":
        return [list(r) for r in rows]
    out = []
    for r in rows:
        s = [ring.specialize(x) for x in r]
        if any(s):
            out.append(s)
    return out


def annihilator_kernel(lam: Sequence[int], ring: RingSpec) -> list[HeckeElt]:
    """
    Basis of {a : x_{lam t} a = 0 for all row-standard t} over a field (or,
    for the Laurent ring, over its fraction field with primitive integral
    vectors).
    """
    lam = Composition(lam)
    n = lam.n
    rows = _system_over(_annihilator_system(lam), ring)
    alg = hecke_algebra(n, ring)
    ncols = factorial(n)
    if not rows:
        basis = [[ring.from_int(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    else:
        basis = kernel(rows, ring, ncols)
    return [alg.from_vector(v) for v in basis]


def semisimple_kernel_rank(lam: Sequence[int]) -> int:
    """Sum of |Tab(mu)|^2 over shapes mu that do not dominate lam."""
    lam = Partition(lam)
    return sum(len(tableaux(mu, "standard")) ** 2
               for mu in partitions_of(lam.n) if not dominates(mu, lam))


def _containment(lam: Partition, gens: Sequence[HeckeElt], ring: RingSpec, method: str) -> bool:
    n = lam.n
    if method == "module":
        mod = permutation_module(lam, ring)
        return all(not mod.act({k: ring.one}, g) for g in gens for k in range(len(mod)))
    if method != "hecke":
        raise ValueError(f"unknown containment method {method!r}")
    alg = hecke_algebra(n, ring)
    t_row, _ = special_tableaux(lam)
    for t in tableaux(lam, "row_standard"):
        x = murphy_element(MurphyIndex(lam, t_row, t), "x", alg)
        if any(hecke_mul(x, g) for g in gens):
            return False
    return True


def _compare_at(lam: Partition, ring: RingSpec) -> dict:
    closed = annihilator_closed(lam, ring)
    ker = annihilator_kernel(lam, ring)
    cv, kv = closed.vectors(), [k.vector() for k in ker]
    closed_rank = rank(cv, ring) if cv else 0
    return {
        "ring": ring.to_json(),
        "closed_rank": closed_rank,
        "kernel_rank": len(kv),
        "equal": closed_rank == len(kv) and span_equal(cv, kv, ring),
        "semisimple": is_semisimple(ring, lam.n)[0],
    }


def verify_annihilator(lam: Sequence[int], ring: RingSpec,
                       specializations: Sequence[RingSpec] = DEFAULT_SPECIALIZATIONS,
                       containment_method: str = "hecke") -> AnnihilatorReport:
    """
    Compare the closed annihilator with the kernel oracle.

    Over a field: containment is checked in that field, and equality means
    equal rank plus equal span. Over Z[v, v^-1]: containment is exact in
    the Laurent ring; equality is certified over Q(v), and every
    specialization is compared too. Specializations that are not
    semisimple are reported but do not count against equality, since the
    annihilator may grow there.

    Over Q(v) containment is checked in Z[v, v^-1], which embeds in Q(v).
    """
    lam = Partition(lam)
    closed = annihilator_closed(lam, ring)
    cont_ring = LAURENT if ring.tag in ("laurent", "qv") else ring
    cont_gens = closed.elements if cont_ring == ring else annihilator_closed(lam, cont_ring).elements
    containment_ok = _containment(lam, cont_gens, cont_ring, containment_method)

    field_ring = QV if ring.tag == "laurent" else ring
    ker = annihilator_kernel(lam, field_ring)
    cv = annihilator_closed(lam, field_ring).vectors()
    kv = [k.vector() for k in ker]
    closed_rank = rank(cv, field_ring) if cv else 0
    equality_ok = closed_rank == len(kv) and span_equal(cv, kv, field_ring)

    witness = None
    if not equality_ok:
        for k, vec in zip(ker, kv):
            if not in_span(cv, vec, field_ring):
                witness = k
                break

    specs = []
    if ring.tag == "laurent":
        for sr in specializations:
            rec = _compare_at(lam, sr)
            specs.append(rec)
            if rec["semisimple"] and not rec["equal"]:
                equality_ok = False
    return AnnihilatorReport(lam, ring, len(closed), len(kv), containment_ok, equality_ok,
                             closed.elements, specs, witness)


def hecke_semisimple(q, n: int, characteristic: int) -> tuple[bool, str]:
    """
    Semisimplicity test from q alone: fails when q != 1 is a primitive e-th
    root of unity with e <= n, or when q = 1 and 0 < characteristic <= n.
    """
    if q == 1:
        if 0 < characteristic <= n:
            return False, f"q = 1 and the characteristic {characteristic} is at most n = {n}"
        return True, "q = 1 in a field of characteristic 0 or larger than n"
    power = q
    for e in range(2, n + 1):
        power = power * q
        if power == 1:
            return False, f"q is a primitive {e}-th root of unity and {e} <= n = {n}"
    return True, f"q is not a root of unity of order at most n = {n}"


def is_semisimple(ring: RingSpec, n: int) -> tuple[bool, str]:
    if not ring.is_field:
        raise ValueError(f"semisimplicity is only decided over a field, got {ring}")
    if n <= 1:
        return True, "n <= 1"
    return hecke_semisimple(ring.q, n, ring.characteristic)


def _ideal_system(gens: Sequence[HeckeElt]) -> list[tuple]:
    """Rows of g a = 0 for every generator g, in T-coordinates."""
    rows = set()
    for gen in gens:
        prods = right_products(gen)
        size = len(prods)
        zero = gen.ring.zero
        for w in range(size):
            row = tuple(prods[v].terms.get(w, zero) for v in range(size))
            if any(row):
                rows.add(row)
    return sorted(rows, key=lambda r: [str(x) for x in r])


def _quotient_system(lam: Partition) -> list[tuple]:
    """Rows of x_st a = 0 modulo shapes strictly above lam, s, t of shape lam."""
    n = lam.n
    elts = murphy_basis(n, LAURENT)
    indices = murphy_indices(n)
    cols = [k for k, idx in enumerate(indices) if idx.shape == lam]
    rows = set()
    for idx in indices:
        if idx.shape != lam:
            continue
        prods = right_products(elts[idx])
        coords = [murphy_coordinates(prods[v]) for v in range(len(prods))]
        for c in cols:
            row = tuple(coords[v][c] for v in range(len(prods)))
            if any(row):
                rows.add(row)
    return sorted(rows, key=lambda r: [str(x) for x in r])


def annihilator_equalities(lam: Sequence[int], ring: RingSpec) -> dict:
    """
    Kernels for the annihilators of H[dominating lam], of the cell quotient
    H[dominating lam]/H[strictly dominating lam], and of M^lam, with
    pairwise span comparisons and the closed form.
    """
    lam = Partition(lam)
    n = lam.n
    if not ring.is_field:
        raise ValueError(f"annihilator_equalities needs a field, got {ring}")
    ncols = factorial(n)
    gens = [e for idx, e in murphy_basis(n, LAURENT).items() if dominates(idx.shape, lam)]

    def solve(rows):
        rows = _system_over(rows, ring)
        if not rows:
            return [[ring.from_int(int(i == j)) for j in range(ncols)] for i in range(ncols)]
        return kernel(rows, ring, ncols)

    spaces = {
        "ideal": solve(_ideal_system(gens)),
        "quotient": solve(_quotient_system(lam)),
        "module": solve(_annihilator_system(lam)),
    }
    closed = annihilator_closed(lam, ring).vectors()
    names = list(spaces)
    pairs = {}
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            pairs[f"{names[a]}={names[b]}"] = span_equal(spaces[names[a]], spaces[names[b]], ring)
    pairs["module=closed"] = span_equal(spaces["module"], closed, ring)
    return {
        "lambda": list(lam),
        "ring": ring.to_json(),
        "ranks": {k: len(v) for k, v in spaces.items()},
        "closed_rank": len(closed),
        "equal": pairs,
        "all_equal": all(pairs.values()),
    }


def quotient_cellular_rank(lam: Sequence[int], ring: RingSpec = LAURENT) -> int:
    """Rank of H / Ann M^lam: sum of |Tab(mu)|^2 over mu dominated by lam'."""
    lam = Partition(lam)
    conj = lam.transpose()
    count = sum(len(tableaux(mu, "standard")) ** 2 for mu in partitions_of(lam.n) if dominates(conj, mu))
    closed = annihilator_closed(lam, ring)
    if factorial(lam.n) - len(closed) != count:
        raise ArithmeticError(f"rank mismatch for {tuple(lam)}: {count} vs n! - {len(closed)}")
    return count


# -- the characteristic-two counterexample -----------------------------------------

COUNTEREXAMPLE_R = "(23)+(1342)+(1243)+(14)"
_TABLEAU_NAMES = {"1,2,3,4": "a", "1,2,3/4": "b", "1,2,4/3": "c", "1,3,4/2": "d"}


def counterexample_report() -> dict:
    """
    lam = (2,2), v = 1: the closed generators in cycle notation, the
    annihilator ranks in characteristic 0 and 2, and the element r that
    kills M^lam mod 2 without lying in the reduced integral span.
    """
    from .symgroup import parse_cycles

    lam = Partition((2, 2))
    n = 4
    q1, gf2 = RingSpec.rationals(1), RingSpec.gfp(2, 1)
    closed = annihilator_closed(lam, LAURENT)
    lines = []
    for idx, elt in zip(closed.labels, closed.elements):
        label = _TABLEAU_NAMES[str(idx.s)] + _TABLEAU_NAMES[str(idx.t)]
        lines.append({"label": label, "s": str(idx.s), "t": str(idx.t),
                      "cycles": elt.specialize(q1).cycle_string()})

    alg2 = hecke_algebra(n, gf2)
    r = alg2.element({parse_cycles(c, n): 1 for c in ("(23)", "(1342)", "(1243)", "(14)")})
    mod2 = permutation_module(lam, gf2)
    r_kills = all(not mod2.act({k: gf2.one}, r) for k in range(len(mod2)))
    closed2 = [e.specialize(gf2).vector() for e in closed.elements]
    r_in_span = in_span(closed2, r.vector(), gf2)

    ker0 = annihilator_kernel(lam, q1)
    ker2 = annihilator_kernel(lam, gf2)
    witness = next((k for k in ker2 if not in_span(closed2, k.vector(), gf2)), None)
    return {
        "lambda": list(lam),
        "generators": lines,
        "closed_rank": len(closed),
        "dim_char0": len(ker0),
        "dim_char2": len(ker2),
        "r": COUNTEREXAMPLE_R,
        "r_annihilates": r_kills,
        "membership_of_r": r_in_span,
        "witness": witness.cycle_string() if witness is not None else None,
    }
