import pytest

import koszul_lab as kl


def test_quadric_relation_of_the_conic():
    h = kl.homology({"blocks": [2], "power": [2]}, 1, 4)
    assert h["homology"] == 1
    assert h["chains"] == 9


def test_segre_betti_and_index():
    table = kl.betti([2, 2], [1, 1], 2)
    entries = {(e["i"], e["j"]): e["dim"] for e in table["entries"]}
    assert entries[(1, 2)] == 1
    assert kl.green_lazarsfeld_index([3], [2], 3) == ">= 3"


def test_suite_is_deterministic():
    a = kl.run_suite("remark_b", seed=7, size=10)
    b = kl.run_suite("remark_b", seed=7, size=10)
    assert a == b
    assert a["verdict"] == "pass"
    assert len(a["cases"]) == 10


def test_families_and_regularity():
    assert len(kl.cycle_families("z1", 2, 2)) == 2
    assert kl.regularity({"blocks": [2], "generators": [[2, 0], [0, 3]]})[0] == 4
    assert "gen2" in kl.suite_names()


def test_errors():
    with pytest.raises(ValueError):
        kl.run_suite("gen2", field="p=2")
    with pytest.raises(ValueError):
        kl.homology({"blocks": [2], "generators": [[1]]}, 1, 2)
    with pytest.raises(RuntimeError):
        kl.betti([4], [4], 4)
