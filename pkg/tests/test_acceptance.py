"""
One test per acceptance criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the lines in order.
Criteria 3 and 9 each contain one clause that the computation contradicts;
those clauses are split out as strict xfails so the disagreement stays
visible instead of being absorbed into a passing test.
"""

from fractions import Fraction
from math import factorial

import pytest

from heckeann.combinat import compositions_of, dominates, partitions_of, tableaux
from heckeann.hecke import hecke_algebra, murphy_change_of_basis, murphy_element
from heckeann.linalg import in_span
from heckeann.modrep import (annihilator_closed, annihilator_equalities, annihilator_kernel,
                             hecke_semisimple, is_semisimple, permutation_module,
                             quotient_cellular_rank, verify_annihilator)
from heckeann.rings import RingSpec
from heckeann.schurweyl import (check_e_power_identity, check_hecke_relations, check_nilpotent,
                                check_sl2_triples, check_u_relations, embedding_map, phi_iso,
                                verify_commuting_actions, verify_phi_equivariance)
from heckeann.symgroup import d_of, length
from heckeann.verify import (check_embeddings, check_pairing_diagonal, check_pairing_triangular,
                             run_suite)

from published_values import F12_MATRIX, TABLEAUX, as_group_sum, parse_group_sum, printed_generator

LAURENT = RingSpec.laurent()
QV = RingSpec.qv()
Q1 = RingSpec.rationals(1)
GF2 = RingSpec.gfp(2, 1)
NAMES = {v: k for k, v in TABLEAUX.items()}


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")
        assert ok, detail
    return emit


def tab_squared(mu):
    return len(tableaux(mu, "standard")) ** 2


def not_dominating_count(lam):
    return sum(tab_squared(mu) for mu in partitions_of(lam.n if hasattr(lam, "n") else sum(lam))
               if not dominates(mu, lam))


def test_criterion_1_murphy_basis(report):
    dets = {}
    ok = True
    for n in range(1, 5):
        det = murphy_change_of_basis(n, LAURENT).det()
        dets[n] = str(det)
        ok &= det.unit_part() is not None
    for v in (1, 2):
        det5 = murphy_change_of_basis(5, RingSpec.rationals(v)).det()
        dets[f"5@v={v}"] = "nonzero" if det5 else "zero"
        ok &= det5 != 0
    report(1, ok, f"determinants {dets}")


def test_criterion_2_integral_annihilator(report):
    rows = []
    ok = True
    for n in range(1, 5):
        for lam in partitions_of(n):
            rep = verify_annihilator(lam, LAURENT)
            want = not_dominating_count(lam)
            good = rep.containment_ok and rep.equality_ok and rep.kernel_rank == rep.closed_rank == want
            ok &= good
            rows.append(f"{tuple(lam)}:{rep.kernel_rank}/{want}")
    report(2, ok, ", ".join(rows))


def _closed_at_one():
    closed = annihilator_closed((2, 2), LAURENT)
    return {NAMES[str(i.s)] + NAMES[str(i.t)]: (i, e) for i, e in zip(closed.labels, closed.elements)}


@pytest.mark.xfail(strict=True, reason="four published generators differ from the sharp-twisted elements by a sign")
def test_criterion_3a_printed_generators_token_for_token(report):
    closed = _closed_at_one()
    exact, differ = [], []
    for label, (idx, elt) in sorted(closed.items()):
        (exact if as_group_sum(elt) == printed_generator(label) else differ).append(label)
    signs = {lab: (-1) ** (length(d_of(closed[lab][0].s)) + length(d_of(closed[lab][0].t))) for lab in differ}
    report("3a", not differ, f"{len(exact)}/10 match exactly; {differ} differ by the global sign "
           f"(-1)^(l(d(s))+l(d(t))) = {signs}; the published list equals the y-kind elements")


def test_criterion_3b_characteristic_two_example(report):
    closed = _closed_at_one()
    alg = hecke_algebra(4, LAURENT)
    y_matches = sum(as_group_sum(murphy_element(idx, "y", alg)) == printed_generator(label)
                    for label, (idx, _) in closed.items())
    rank2 = len(annihilator_kernel((2, 2), GF2))
    alg2 = hecke_algebra(4, GF2)
    r = alg2.element(parse_group_sum("(23)+(1342)+(1243)+(14)"))
    mod2 = permutation_module((2, 2), GF2)
    kills = all(not mod2.act({k: GF2.one}, r) for k in range(len(mod2)))
    span2 = [e.specialize(GF2).vector() for _, e in closed.values()]
    member = in_span(span2, r.vector(), GF2)
    ok = len(closed) == 10 and y_matches == 10 and rank2 == 11 and kills and not member
    report("3b", ok, f"10 generators, y-kind matches {y_matches}/10, GF(2) kernel rank {rank2}, "
           f"r annihilates {kills}, r in reduced span {member}")


def test_criterion_4_semisimple(report):
    rows = []
    ok = True
    for ring in (RingSpec.rationals(2), QV):
        for n in range(1, 5):
            for lam in partitions_of(n):
                rep = verify_annihilator(lam, ring)
                ok &= rep.equality_ok and rep.kernel_rank == not_dominating_count(lam)
        rows.append(f"{ring} ranks equal")
    grid = {
        "Q q=4 n=4": (is_semisimple(RingSpec.rationals(2), 4)[0], True),
        "Q q=-1 n=2": (hecke_semisimple(Fraction(-1), 2, 0)[0], False),
        "GF(2) q=1 n=4": (is_semisimple(GF2, 4)[0], False),
        "GF(5) q=1 n=4": (is_semisimple(RingSpec.gfp(5, 1), 4)[0], True),
    }
    ok &= all(got == want for got, want in grid.values())
    rows.append("is_semisimple " + ", ".join(f"{k}={g}" for k, (g, _) in grid.items()))
    report(4, ok, "; ".join(rows))


def test_criterion_5_pairing(report):
    checks = check_pairing_triangular(4) + check_pairing_diagonal(4)
    report(5, all(c.passed for c in checks), "; ".join(f"{c.name}: {c.detail or 'ok'}" for c in checks))


def test_criterion_6_tensor_space(report):
    failures = []
    cases = [(m, n) for m in (2, 3) for n in (1, 2, 3)] + [(2, 4)]
    for m, n in cases:
        rel = check_u_relations(m, n)
        results = {**rel, "H": check_hecke_relations(m, n), "commute": verify_commuting_actions(m, n),
                   "sl2": check_sl2_triples(m, n), "nilpotent": check_nilpotent(m, n)}
        failures += [f"{k} m={m} n={n}" for k, v in results.items() if not v]
    for n in (1, 2, 3):
        failures += [f"E^rF r={r} n={n}" for r in (1, 2, 3) if not check_e_power_identity(r, 2, n)]
    report(6, not failures, f"{len(cases)} (m, n) cases; failures {failures}")


def test_criterion_7_embedding_rank_drop(report):
    mat = embedding_map((3, 1), 1, 2, 2, 4)
    at_one = tuple(tuple(int(x) for x in r) for r in mat.specialize(Q1).rows)
    rq, r2 = mat.specialize(Q1).rank(), mat.specialize(GF2).rank()
    inj = check_embeddings(4)[0]
    ok = at_one == F12_MATRIX and rq == 4 and r2 == 3 and inj.passed
    report(7, ok, f"matrix matches {at_one == F12_MATRIX}, rank Q {rq}, rank GF(2) {r2}, "
           f"injective over Q(v) {inj.passed}")


def test_criterion_8_phi(report):
    bad = []
    count = 0
    for n in range(1, 5):
        for lam in compositions_of(n):
            count += 1
            phi = phi_iso(lam, n)
            if phi.nrows != phi.ncols or phi.det().unit_part() is None or not verify_phi_equivariance(lam, n):
                bad.append(tuple(lam))
    report(8, not bad, f"{count} compositions, failures {bad}")


@pytest.mark.xfail(strict=True, reason="the cell-quotient annihilator is larger than Ann M^lam for some shapes")
def test_criterion_9a_three_annihilators(report):
    bad = []
    for n in range(1, 4):
        for lam in partitions_of(n):
            rep = annihilator_equalities(lam, QV)
            if not rep["all_equal"]:
                bad.append(f"{tuple(lam)} ranks {rep['ranks']}")
    report("9a", not bad, f"ideal = module = closed hold throughout; quotient differs at {bad}")


def test_criterion_9b_quotient_rank_identity(report):
    bad = []
    for n in range(1, 6):
        for lam in partitions_of(n):
            above = sum(tab_squared(mu) for mu in partitions_of(n) if dominates(mu, lam))
            closed = len(annihilator_closed(lam, LAURENT))
            if not (factorial(n) - not_dominating_count(lam) == above == factorial(n) - closed
                    == quotient_cellular_rank(lam)):
                bad.append(tuple(lam))
    report("9b", not bad, f"n <= 5, failures {bad}")


def test_criterion_10_property_suites(report):
    checks = run_suite("all", 5)
    failed = [f"{c.name}: {c.detail}" for c in checks if not c.passed]
    report(10, not failed, f"{len(checks)} checks, {len(failed)} failed {failed[:3]}")
