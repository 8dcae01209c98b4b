import random
from fractions import Fraction
from math import factorial

import pytest

from heckeann.combinat import Composition, Partition, compositions_of, dominates, parse_tableau, partitions_of, special_tableaux, tableaux
from heckeann.hecke import MurphyIndex, hecke_algebra, involution, murphy_element, x_y_element
from heckeann.linalg import ExactMatrix, in_span, rank
from heckeann.modrep import (_containment, annihilator_closed, annihilator_equalities, annihilator_kernel,
                             cell_ideal_basis, cell_module_structure, counterexample_report,
                             hecke_semisimple, ideal_shapes_not_below, is_semisimple, kernel_basis,
                             perm_module_action, perm_module_gen_action, permutation_module,
                             quotient_cellular_rank, semisimple_kernel_rank, specht_ideal,
                             twisted_annihilator, verify_annihilator, verify_twisted_annihilator)
from heckeann.rings import LaurentPoly, ModInt, RingSpec
from heckeann.symgroup import from_word, reduced_word
from heckeann.verify import random_element

from published_values import COUNTEREXAMPLE_R, parse_group_sum

LAURENT = RingSpec.laurent()
QV = RingSpec.qv()
Q1 = RingSpec.rationals(1)
Q2 = RingSpec.rationals(2)
GF2 = RingSpec.gfp(2, 1)
Q = LaurentPoly.monomial(1, 2)


def parts_upto(n):
    return [p for k in range(1, n + 1) for p in partitions_of(k)]


# -- permutation modules ------------------------------------------------------------------

def test_gen_action_examples():
    mat = perm_module_gen_action((2, 2), 1, LAURENT)
    t0 = parse_tableau("1,2/3,4")
    k = mat.row_basis.index(t0)
    assert mat.matrix.rows[k][k] == Q
    mat2 = perm_module_gen_action((2, 2), 2, LAURENT)
    t = parse_tableau("1,3/2,4")
    row = mat2.matrix.rows[mat2.row_basis.index(t)]
    assert row[mat2.col_basis.index(t0)] == Q
    assert row[mat2.col_basis.index(t)] == Q - 1


def test_regular_module():
    """For shape (1^n) the module is H itself under right multiplication."""
    alg = hecke_algebra(3, LAURENT)
    mod = permutation_module(Composition((1, 1, 1)), LAURENT)
    for i in (1, 2):
        g = mod.gen_matrix(i)
        for k, t in enumerate(mod.basis):
            elt = mod.basis_element(t, alg)
            assert [g.rows[k][j] for j in range(len(mod))] == mod.coordinates(elt * alg.gen(i))


@pytest.mark.parametrize("shape", [c for n in range(2, 5) for c in compositions_of(n)], ids=str)
def test_module_action_matches_hecke_product(shape):
    """Matrix route vs x_{lam t} h computed in H and read back in the module basis."""
    rng = random.Random(sum(shape) * 31 + len(shape))
    n = shape.n
    alg = hecke_algebra(n, LAURENT)
    mod = permutation_module(shape, LAURENT)
    for _ in range(2):
        h = random_element(n, rng, density=0.2)
        via_words = ExactMatrix.zeros(len(mod), len(mod), LAURENT)
        for w, c in h.items():
            m = ExactMatrix.identity(len(mod), LAURENT)
            for i in reduced_word(w):
                m = m @ mod.gen_matrix(i)
            via_words = via_words + m.scale(c)
        direct = [mod.coordinates(mod.basis_element(t, alg) * h) for t in mod.basis]
        assert via_words.rows == direct == perm_module_action(shape, h).matrix.rows


@pytest.mark.parametrize("shape", [c for n in range(2, 6) for c in compositions_of(n)], ids=str)
def test_module_relations(shape):
    n = shape.n
    mod = permutation_module(shape, LAURENT)
    ident = ExactMatrix.identity(len(mod), LAURENT)
    g = {i: mod.gen_matrix(i) for i in range(1, n)}
    for i in range(1, n):
        assert (g[i] + ident) @ (g[i] - ident.scale(Q)) == ExactMatrix.zeros(len(mod), len(mod), LAURENT)
        for j in range(i + 1, n):
            if j == i + 1:
                assert g[i] @ g[j] @ g[i] == g[j] @ g[i] @ g[j]
            else:
                assert g[i] @ g[j] == g[j] @ g[i]


@pytest.mark.parametrize("comp", [(1, 2), (1, 3), (2, 1, 1), (1, 2, 1), (1, 1, 2)], ids=str)
def test_composition_and_sorted_partition_agree(comp):
    lam = Composition(comp).sorted()
    for ring in (QV, Q1, GF2):
        assert len(annihilator_kernel(comp, ring)) == len(annihilator_kernel(lam, ring))


# -- cell ideals and Specht ideals ---------------------------------------------------------

def test_cell_ideal_full_and_sharp_complement():
    full = cell_ideal_basis(lambda mu: True, 4, LAURENT)
    assert len(full) == 24 and full.rank() == 24
    lam = Partition((2, 2))
    ideal = cell_ideal_basis(ideal_shapes_not_below(lam), 4, LAURENT)
    assert {idx.shape for idx in ideal.labels} == {(4,), (3, 1)}
    assert len(ideal) == 10 and 24 - len(ideal) == 14


def test_cell_ideal_rejects_non_closed():
    with pytest.raises(ValueError):
        cell_ideal_basis(lambda mu: mu == (2, 2), 4, LAURENT)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cell_ideals_are_two_sided(n):
    alg = hecke_algebra(n, LAURENT)
    for lam in partitions_of(n):
        ideal = cell_ideal_basis(ideal_shapes_not_below(lam), n, LAURENT)
        vecs = ideal.vectors()
        for g in ideal.elements:
            for i in range(1, n):
                assert in_span(vecs, (g * alg.gen(i)).vector(), LAURENT)
                assert in_span(vecs, (alg.gen(i) * g).vector(), LAURENT)


def test_cell_module_examples():
    alg = hecke_algebra(4, LAURENT)
    for lam in partitions_of(4):
        assert cell_module_structure(lam, alg.one).matrix == ExactMatrix.identity(len(tableaux(lam)), LAURENT)
    for i in (1, 2, 3):
        assert cell_module_structure((4,), alg.gen(i)).matrix.rows == [[Q]]


@pytest.mark.parametrize("lam", partitions_of(4), ids=str)
def test_straightening_independent_of_s(lam):
    alg = hecke_algebra(4, LAURENT)
    for i in (1, 2, 3):
        mats = [cell_module_structure(lam, alg.gen(i), s).matrix for s in tableaux(lam)]
        assert all(m == mats[0] for m in mats)


@pytest.mark.parametrize("lam", partitions_of(4), ids=str)
def test_specht_rank(lam):
    assert specht_ideal(lam, QV).rank() == len(tableaux(lam))


def test_specht_extremes():
    assert len(specht_ideal((3,), QV)) == 1
    assert len(specht_ideal((1, 1, 1), QV)) == 1


# -- annihilators ------------------------------------------------------------------------

def test_closed_examples():
    assert len(annihilator_closed((1, 1, 1), LAURENT)) == 0
    for n in (2, 3, 4):
        assert len(annihilator_closed((n,), LAURENT)) == factorial(n) - 1
    assert len(annihilator_closed((2, 2), LAURENT)) == 10


@pytest.mark.parametrize("lam", parts_upto(4), ids=str)
def test_integral_annihilator(lam):
    rep = verify_annihilator(lam, LAURENT)
    assert rep.containment_ok and rep.equality_ok
    assert rep.closed_rank == rep.kernel_rank == semisimple_kernel_rank(lam)


@pytest.mark.parametrize("lam", partitions_of(5), ids=str)
def test_containment_n5(lam):
    rep = verify_annihilator(lam, LAURENT, specializations=(), containment_method="module")
    assert rep.containment_ok


def test_containment_routes_agree():
    lam = Partition((2, 1, 1))
    gens = annihilator_closed(lam, LAURENT).elements
    assert _containment(lam, gens, LAURENT, "hecke") and _containment(lam, gens, LAURENT, "module")
    extra = list(gens) + [hecke_algebra(4, LAURENT).one]
    assert not _containment(lam, extra, LAURENT, "hecke")
    assert not _containment(lam, extra, LAURENT, "module")


@pytest.mark.parametrize("lam", parts_upto(4), ids=str)
@pytest.mark.parametrize("ring", [QV, Q2], ids=str)
def test_semisimple_equality(lam, ring):
    rep = verify_annihilator(lam, ring)
    assert rep.containment_ok and rep.equality_ok
    assert rep.kernel_rank == semisimple_kernel_rank(lam)


def test_kernel_examples():
    assert annihilator_kernel((1, 1, 1), QV) == []
    assert len(annihilator_kernel((2, 2), Q1)) == 10
    ker2 = annihilator_kernel((2, 2), GF2)
    assert len(ker2) == 11
    r = hecke_algebra(4, GF2).element(parse_group_sum(COUNTEREXAMPLE_R))
    assert in_span([k.vector() for k in ker2], r.vector(), GF2)


def test_kernel_basis_helper():
    assert kernel_basis(ExactMatrix.identity(3, Q1)) == []
    one = ModInt(1, 2)
    assert kernel_basis(ExactMatrix([[one, one]], GF2)) == [[one, one]]
    with pytest.raises(ValueError):
        kernel_basis(ExactMatrix.identity(2, LAURENT))


def test_gf2_report():
    rep = verify_annihilator((2, 2), GF2)
    assert rep.containment_ok and not rep.equality_ok
    assert (rep.closed_rank, rep.kernel_rank) == (10, 11)
    assert rep.witness is not None
    assert not in_span(annihilator_closed((2, 2), GF2).vectors(), rep.witness.vector(), GF2)


def test_report_json_keys():
    data = verify_annihilator((2, 1), QV).to_json(with_generators=True)
    assert {"lambda", "ring", "closed_rank", "kernel_rank", "containment", "equality", "generators"} <= set(data)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monotonicity(n):
    kers = {lam: [k.vector() for k in annihilator_kernel(lam, QV)] for lam in partitions_of(n)}
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            if dominates(lam, mu):
                assert all(in_span(kers[lam], vec, QV) for vec in kers[mu]) if kers[lam] else not kers[mu]


def test_semisimplicity_grid():
    assert is_semisimple(RingSpec.rationals(2), 4)[0]
    assert not is_semisimple(GF2, 4)[0]
    assert not hecke_semisimple(Fraction(-1), 2, 0)[0]
    assert "primitive 2" in hecke_semisimple(Fraction(-1), 2, 0)[1]
    assert hecke_semisimple(Fraction(-1), 1, 0)[0]
    assert is_semisimple(RingSpec.gfp(5, 1), 4)[0]
    assert not is_semisimple(RingSpec.gfp(5, 1), 5)[0]
    # v = 2 in GF(5): q = 4 = -1 is a primitive square root of unity
    assert not is_semisimple(RingSpec.gfp(5, 2), 2)[0]
    with pytest.raises(ValueError):
        is_semisimple(LAURENT, 3)


@pytest.mark.parametrize("lam", parts_upto(4), ids=str)
def test_twisted_annihilator(lam):
    tw = twisted_annihilator(lam, LAURENT)
    closed = annihilator_closed(lam, LAURENT)
    assert [involution(e, "sharp") for e in tw.elements] == list(closed.elements)
    assert verify_twisted_annihilator(lam, LAURENT)


def test_twisted_rank_22():
    assert len(twisted_annihilator((2, 2), QV)) == 10
    assert len(twisted_annihilator((1, 1, 1), QV)) == 0


@pytest.mark.parametrize("lam", parts_upto(5), ids=str)
def test_quotient_cellular_rank(lam):
    assert quotient_cellular_rank(lam) == factorial(lam.n) - len(annihilator_closed(lam, LAURENT))


def test_quotient_rank_examples():
    assert quotient_cellular_rank((2, 2)) == 14
    assert quotient_cellular_rank((1, 1, 1, 1)) == 24
    assert quotient_cellular_rank((4,)) == 1


# -- the three annihilators ------------------------------------------------------------------

@pytest.mark.parametrize("lam", parts_upto(3), ids=str)
def test_ideal_and_module_annihilators_agree(lam):
    rep = annihilator_equalities(lam, QV)
    assert rep["equal"]["ideal=module"] and rep["equal"]["module=closed"]


@pytest.mark.parametrize("lam", parts_upto(4), ids=str)
def test_quotient_annihilator_is_cell_module_annihilator(lam):
    """The cell quotient is |Tab(lam)| copies of the cell module, so its annihilator has corank |Tab|^2."""
    rep = annihilator_equalities(lam, QV)
    assert rep["ranks"]["quotient"] == factorial(lam.n) - len(tableaux(lam)) ** 2


def test_quotient_differs_for_hook_shapes():
    """M^(1,1) = H is faithful; the cell quotient for (1,1) is killed by x_(2)."""
    rep = annihilator_equalities((1, 1), QV)
    assert rep["ranks"] == {"ideal": 0, "quotient": 1, "module": 0}
    assert not rep["equal"]["ideal=quotient"]
    alg = hecke_algebra(2, LAURENT)
    x2 = x_y_element((2,), "x", alg)
    cell = murphy_element(MurphyIndex.of(parse_tableau("1/2"), parse_tableau("1/2")), "x", alg)
    assert cell * x2 == x2


def test_equalities_top_shape():
    rep = annihilator_equalities((3,), QV)
    assert rep["all_equal"] and set(rep["ranks"].values()) == {5}


# -- the characteristic-two example -------------------------------------------------------

def test_counterexample_report():
    rep = counterexample_report()
    assert rep["closed_rank"] == 10 and rep["dim_char0"] == 10 and rep["dim_char2"] == 11
    assert rep["r_annihilates"] and not rep["membership_of_r"]
    assert rep["r"] == COUNTEREXAMPLE_R
    assert [g["label"] for g in rep["generators"]] == ["aa", "bb", "bc", "bd", "cb", "cc", "cd", "db", "dc", "dd"]


def test_r_annihilates_directly():
    alg = hecke_algebra(4, GF2)
    r = alg.element(parse_group_sum(COUNTEREXAMPLE_R))
    t_row = special_tableaux((2, 2))[0]
    for t in tableaux((2, 2), "row_standard"):
        assert not (murphy_element(MurphyIndex.of(t_row, t), "x", alg) * r)
    assert r.vector() and rank([r.vector()], GF2) == 1
    assert from_word([], 4) == alg.group.elements[alg.group.identity]
