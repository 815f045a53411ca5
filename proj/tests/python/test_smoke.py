from fractions import Fraction

import pytest

import sympmat

DEGREE_ONE_PROJECTION = [[1, 3], [1, -3], [2, 3], [2, -3], [-2, 3], [-2, -3], [-1, 2], [-1, -2]]


def test_enumeration_n2():
    mats = sympmat.enumerate_symplectic(2)
    assert len(mats) == 15
    sizes = sorted(len(m) for m in mats)
    assert [sizes.count(k) for k in range(1, 5)] == [4, 6, 4, 1]


def test_order_counts():
    assert [sympmat.admissible_order_count(n) for n in range(1, 5)] == [2, 8, 48, 384]


def test_orbits():
    orbs = sympmat.orbits(2)
    assert len(orbs) == 5
    assert sorted(len(o["members"]) for o in orbs) == [1, 2, 4, 4, 4]


def test_degree_one_projection_not_representable():
    assert sympmat.is_symplectic_matroid(3, DEGREE_ONE_PROJECTION)
    report = sympmat.is_representable(3, DEGREE_ONE_PROJECTION)
    assert report["representable"] is False
    with pytest.raises(sympmat.SympmatError, match="NotRepresentable"):
        sympmat.witness(3, DEGREE_ONE_PROJECTION)


def test_full_witness():
    w = sympmat.witness(2)
    assert w["symplectic_sum"] == 0
    assert w["certificate"]["ok"] is True
    assert all(v != 0 for v in w["plucker"].values())
    assert w["matrix"][0][3] == Fraction(-1, 3)
    full = sympmat.admissible_pairs(2)
    assert sympmat.verify_witness(2, w["matrix"], full)["ok"] is True
    spec_matrix = [[1, 1, 1, 1], [0, 1, 2, -1]]
    assert sympmat.verify_witness(2, spec_matrix, full)["ok"] is True
    assert sympmat.verify_witness(2, spec_matrix, [[1, 2]])["reason"] == "pattern_mismatch"


def test_strata():
    assert sympmat.betti_numbers(3) == [1, 1, 2, 2, 2, 2, 1, 1]
    dims = sympmat.cell_dims(2, sympmat.admissible_pairs(2))
    assert (dims["total"], dims["fiber"], dims["quotient"]) == (3, 2, 1)
    stab = sympmat.stabilizer(2, [[1, 2], [1, -2], [-1, 2], [-1, -2]], "T")
    assert stab == {"torus": "T", "dim": 0, "components": 4}
    c = sympmat.classify(2)
    assert len(c["strata"]) == 15 and len(c["types"]) == 16
    assert sympmat.schubert(3, [-2, -1])["dim"] == 7
    assert sympmat.polytope(2, sympmat.admissible_pairs(2))["points"] == [[-1, -1], [-1, 1], [1, -1], [1, 1]]


def test_cli_entry():
    code, out, err = sympmat.run_cli(["enumerate", "--n", "2"])
    assert code == 0 and out.startswith("15 symplectic matroids")
    code, out, err = sympmat.run_cli(["nonsense"])
    assert code == 2


def test_bad_input():
    with pytest.raises(sympmat.SympmatError):
        sympmat.is_representable(2, [[1, 5]])
