import json

import pytest

import lindeg


def test_version():
    assert lindeg.__version__.count(".") == 2


def test_forms_and_tables():
    assert lindeg.euler_form([1, 4], [5, 2]) == 11
    assert lindeg.hom_dim(3, {(1, 3): 1}, {(2, 3): 1}) == 0
    assert lindeg.ext_dim(2, {(1, 1): 1}, {(2, 2): 1}) == 1


def test_decomposition_round_trip():
    rows = [[3, 2], [3]]
    dec = lindeg.decompose_from_ranks(3, rows)
    assert dec == {(1, 1): 1, (1, 2): 2, (2, 2): 1}
    assert lindeg.ranks_from_decomposition(2, dec) == rows
    assert lindeg.well_behaved_rep(3, [1, 2]) == dec


def test_resolution_and_catenoid():
    p, q = lindeg.minimal_projective_resolution(2, {(1, 1): 1})
    assert p == {(1, 2): 1}
    assert q == {(2, 2): 1}
    assert lindeg.is_catenoid(3, {(1, 3): 2, (1, 1): 1, (2, 3): 1})
    assert not lindeg.is_catenoid(3, {(1, 3): 1, (2, 2): 1})


def test_orbits():
    orbits = lindeg.enumerate_orbits(2, 2)
    assert orbits == [[[2, 2], [2]], [[2, 1], [2]], [[2, 0], [2]]]
    assert lindeg.degenerates_to(2, orbits[0], orbits[2])
    assert lindeg.representative(2, orbits[1]) == [[1]]
    assert "r_2_2_2 -> r_2_1_2" in lindeg.hasse_dot(2, 2)
    assert lindeg.strata_dot(3).startswith("digraph strata")


def test_unrealizable_raises():
    rows = [[4, 1, 2], [4, 1], [4]]
    assert not lindeg.is_realizable(4, rows)
    with pytest.raises(lindeg.NotRealizable):
        lindeg.representative(4, rows)
    with pytest.raises(ValueError):
        lindeg.classify(4, rows, [1, 2, 3])


def test_classify_example():
    report = lindeg.classify(6, [[6, 5], [6]], [1, 4])
    assert report["flags"]["irreducible"] and not report["flags"]["smooth"]
    assert report["dimension"] == 11
    assert report["singular"]["sing_dim"] == 4
    assert lindeg.singular_model_mh(6, [1, 4], 1)["sing_codim"] == 7
    bounded = lindeg.singular_summary(6, [[6, 4], [6]], [1, 4])
    assert (bounded["codim_lower"], bounded["codim_upper"]) == (3, 7)
    with pytest.raises(lindeg.NotIrreducible):
        lindeg.singular_summary(6, [[6, 2], [6]], [1, 4])


def test_problem_files():
    problem = {"m": 4, "n": 2, "field": {"kind": "prime", "p": 2}, "d": [1, 2],
               "maps": [{"type": "projection", "zero_indices": [1]}]}
    assert lindeg.classify_problem(problem)["flags"]["irreducible"]
    assert lindeg.census(problem)[1] == 7
    assert lindeg.points(json.dumps(problem)) == lindeg.census(problem)[0]
    with pytest.raises(lindeg.ValidationError):
        lindeg.points({**problem, "d": [2, 1]})


def test_enumeration_helpers():
    assert len(lindeg.fixed_points(3, [[1]], [1, 2])) == 7
    assert lindeg.singular_witness(3, [[1]], [1, 2]) == [[1], [2, 3]]
    check = lindeg.sigma_bijection_check(4, [1, 2], 1, 2)
    assert check["ok"] and check["model_points"] == 7


def test_guard():
    problem = {"m": 10, "n": 2, "field": {"kind": "prime", "p": 2}, "d": [5, 6], "maps": [{"type": "identity"}]}
    with pytest.raises(lindeg.GuardExceeded):
        lindeg.points(problem)


def test_verify_sigma():
    [suite] = lindeg.run_verify("sigma")
    assert suite["passed"]
