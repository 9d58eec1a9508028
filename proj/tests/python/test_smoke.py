import json

import qmnfloer as qf


def test_formula_and_pipeline_agree_on_the_mazur_case():
    r = qf.compute(2, 1, "T23")
    assert r["tau_pipeline"] == 2
    assert r["tau_formula"] == 2
    assert r["agree"] is True


def test_formula_values():
    assert qf.tau_formula(2, 1, 1, 1) == 2
    assert qf.tau_formula(3, 1, 1, -1) == 4
    assert qf.tau_levine(0, -1) == 1
    assert qf.epsilon_formula(2, 1, 0, 0) == 0
    assert qf.winding(2, 1) == -1
    assert qf.genus_qmn(3, 2) == 2


def test_sweep_rows():
    rows = qf.sweep([1, 2], [1], ["unknot", "T23"], parallel=2)
    assert len(rows) == 4
    assert all(row["agree"] for row in rows)


def test_bridge_and_cfa_json():
    b = json.loads(qf.bridge_json(1, 1))
    assert b["schubert"] == "b(8,3)"
    assert qf.schubert(2, 1) == "b(14,5)"
    cfa = json.loads(qf.cfa_json(3, 1, raw_cfa=True))
    assert len(cfa["ops"]) == 40
    cob = json.loads(qf.cfa_json(3, 1))
    assert len(cob["ops"]) == 30


def test_fixture_epsilon():
    for fig in ("fig25", "fig27", "fig29", "fig31"):
        assert qf.fixture_epsilon(fig, 2, 1) == 1


def test_error_type():
    try:
        qf.compute(0, 1, "T23")
    except qf.QmnError:
        pass
    else:
        raise AssertionError("expected QmnError")
