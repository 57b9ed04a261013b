import math

import pytest

import loccdetect as ld


def test_certify_gamma_d():
    for d in range(4, 9):
        assert ld.certify(d)


def test_named_examples():
    for name in ("quintuple5", "quadrupleBGK", "pauliL4"):
        rep = ld.lemma_verdict(ld.named_example(name))
        assert rep.verdict == ld.Verdict.CertifiedLoccIndistinguishable
    with pytest.raises(Exception):
        ld.named_example("nope")


def test_gamma_values():
    g4 = ld.gamma_d_set(4)
    ident = ld.identity_label(g4.structure)
    assert ld.gamma_complex(g4, ident) == pytest.approx(4.0)
    assert abs(ld.gamma_complex(g4, ld.qudit_label(0, 1, 4))) < 1e-12


def test_detector():
    det = ld.build_detector_theorem2(4)
    l1 = det.lambda1()
    assert l1 >= ld.theorem2_analytic_bound(4) - 1e-9
    assert not ld.nielsen_transfer_possible(l1, 4)
    assert det.trace_norm_sq() == pytest.approx(1.0)


def test_first_move():
    states = ld.theorem1_product_set(4)
    rep = ld.first_move_report(states, ld.Party.Alice)
    assert rep.solution_dim == 1
    assert not rep.nontrivial_exists
    assert (
        ld.locally_indistinguishable_by_symmetry(states)
        == ld.Verdict.CertifiedLoccIndistinguishable
    )


def test_witness_ledger():
    led = ld.contradiction_ledger(3)
    assert led.consistent
    trace = ld.rank_obstruction(5)
    assert trace.contradiction
    assert trace.contradiction_index == 6


def test_kmin_table():
    rows = {r.dim: r.kmin for r in ld.kmin_table(12)}
    assert rows[4] == 4 and rows[6] == 5 and rows[12] == 10


def test_set_json_roundtrip():
    g6 = ld.gamma_d_set(6)
    back = ld.parse_set_json(ld.set_to_json(g6))
    assert list(back.labels) == list(g6.labels)


def test_mes_vector_norm():
    u = ld.build_unitary(ld.qudit_structure(3), ld.qudit_label(1, 2, 3))
    psi = ld.mes_vector(u)
    assert math.isclose(sum(abs(x) ** 2 for x in psi), 1.0, abs_tol=1e-12)
