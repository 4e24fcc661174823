import json
from fractions import Fraction

import pytest

import qhtoolkit as qht


def test_catalog_lists_shipped_rings():
    assert {"cp2", "quadric2", "quadric4", "s2s2"} <= set(qht.catalog())
    assert qht.ring("cp2")["dim_M"] == 4


def test_cp2_idempotents():
    d = qht.decompose("cp2_novikov", "u")
    assert d["count"] == 3
    assert d["exact"] and d["verified"]
    for e in d["idempotents"]:
        text = e["text"]
        assert text.startswith("(1/3)*1")
    assert qht.valuation("cp2_novikov", "1/3 + 1/3*u*T^(-1/3) + 1/3*u2*T^(-2/3)") == Fraction(-2, 3)


def test_quantum_product():
    assert qht.qmul("cp2", "h", "h2") == "(t)*1"
    assert qht.qmul("quadric4_homology", "[pt]", "[pt]") == "(s^(-2))*[M]"


def test_rho_and_extension():
    complex_ = {
        "field": {"kind": "laurent", "lambda0": "1", "N_M": 1},
        "generators": [
            {"orbit_id": "x", "action": "2", "index": 1},
            {"orbit_id": "y", "action": "1/2", "index": 0},
            {"orbit_id": "z", "action": "1", "index": 0},
        ],
        "differential": [
            {"from": "x", "to": "y", "scalar": "1"},
            {"from": "x", "to": "z", "scalar": "1"},
        ],
    }
    assert qht.rho(complex_, "z") == Fraction(1, 2)
    assert qht.rho(json.dumps(complex_), "s*z") == Fraction(3, 2)
    with pytest.raises(qht.QhtError):
        qht.rho(complex_, "x")
    rc = qht.random_complex(0, 4)
    assert len(rc["complex"]["generators"]) <= 4
    assert qht.extension_suite(20) == (20, 20)


def test_gelfand_cetlin():
    assert qht.flag_dim("gr24") == 4
    assert qht.monotone_lambda("gr24", 2) == [4, 4, 0, 0]
    assert qht.classify("gr24", [2, 3, 1, 2])[0] == "Interior"
    assert qht.classify("gr24", [10, 10, 10, 10])[0] == "Outside"
    assert qht.vertices("cp1", [1, -1]) == [(Fraction(-1),), (Fraction(1),)]
    with pytest.raises(qht.QhtError):
        qht.flag_dim("gr44")


def test_cli_bridge_and_acceptance():
    r = qht.run("gc", "classify", "gr24", 2, 3, 1, 2)
    assert r["status"] == "ok" and r["payload"]["class"] == "Interior"
    assert qht.run("nope")["code"] == "UnknownCommand"
    results = qht.acceptance()
    assert len(results) == 7
    assert all(passed for _, passed in results)
