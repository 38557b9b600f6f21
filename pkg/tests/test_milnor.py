import random

import pytest

from arrinv.arrangement import MultiArrangement, compute_l2, make_arrangement
from arrinv.catalog import builtin
from arrinv.checks import random_multiplicities
from arrinv.errors import HypothesisError, RefusalError
from arrinv.milnor import (
    local_b1_lower_bound,
    milnor_b1,
    monodromy_trivial_criterion,
)

from oracles import per_character_milnor


def unit(arr):
    return MultiArrangement(arr, (1,) * arr.n)


def flats_of(arr):
    return [(f.members, f.mobius) for f in compute_l2(arr).multiple_flats()]


def test_unit_multiplicity_catalog():
    report = milnor_b1(unit(builtin("nonpappus")), separated=True)
    assert report.N == 9
    assert report.b1 == 8
    assert report.trivial_monodromy
    assert report.eigen_multiplicities[0] == 8
    assert all(report.eigen_multiplicities[j] == 0 for j in range(1, 9))
    report = milnor_b1(unit(builtin("x3")), separated=True)
    assert (report.N, report.b1, report.trivial_monodromy) == (6, 5, True)
    assert report.hypotheses == {"q_decomposable": True, "separated": "asserted"}


def test_pencil_has_nontrivial_monodromy():
    pencil = make_arrangement([(1, 0), (0, 1), (1, 1)])
    report = milnor_b1(unit(pencil), separated=True)
    # the Milnor fiber of three concurrent lines is a thrice-punctured torus
    assert report.N == 3
    assert report.b1 == 4
    assert not report.trivial_monodromy
    assert report.eigen_multiplicities == {0: 2, 1: 1, 2: 1}
    assert not monodromy_trivial_criterion(unit(pencil))


def test_weight_vector_turns_monodromy_on():
    # rank >= 3 and decomposable, so the unit fiber has b1 = n - 1; an
    # adapted weight vector still produces an extra eigenvalue, which is
    # why the enumeration, not the hypothesis test, is authoritative
    arr = builtin("split_solvable", (2, 2))
    assert monodromy_trivial_criterion(unit(arr))
    assert milnor_b1(unit(arr), separated=True).b1 == arr.n - 1
    ma = MultiArrangement(arr, (1, 2, 2, 1, 2))
    report = milnor_b1(ma, separated=True)
    assert report.N == 8
    assert report.b1 == 5
    assert report.eigen_multiplicities[4] == 1
    assert not report.trivial_monodromy


def test_weight_vector_larger_example():
    arr = builtin("split_solvable", (3, 4))
    assert milnor_b1(unit(arr), separated=True).b1 == 7
    ma = MultiArrangement(arr, (1, 2, 2, 2, 1, 1, 1, 2))
    report = milnor_b1(ma, separated=True)
    assert report.N == 12
    assert report.b1 == 10
    assert not report.trivial_monodromy


def test_error_order():
    with pytest.raises(RefusalError, match="assert"):
        milnor_b1(unit(builtin("nonpappus")))
    # non-decomposable input fails on the hypothesis even without the
    # flag, and the message carries the unconditional lower bound
    with pytest.raises(HypothesisError, match="b1 >= 8"):
        milnor_b1(unit(builtin("pappus")))
    with pytest.raises(HypothesisError):
        milnor_b1(unit(builtin("pappus")), separated=True)
    assert local_b1_lower_bound(unit(builtin("pappus"))) == 8


def test_criterion_flags():
    assert monodromy_trivial_criterion(unit(builtin("x3")))
    assert monodromy_trivial_criterion(unit(builtin("nonpappus")))
    assert not monodromy_trivial_criterion(unit(builtin("braid", (3,))))
    assert not monodromy_trivial_criterion(unit(builtin("pappus")))


def test_eigen_invariants():
    rng = random.Random(79)
    for name in ("x3", "x2", "nonpappus"):
        arr = builtin(name)
        for _ in range(6):
            ma = MultiArrangement(arr, random_multiplicities(rng, arr.n))
            report = milnor_b1(ma, separated=True)
            eigen = report.eigen_multiplicities
            assert report.b1 == sum(eigen.values())
            assert sorted(eigen) == list(range(report.N))
            # complex conjugation pairs the nontrivial eigenvalues
            for j in range(1, report.N):
                assert eigen[j] == eigen[report.N - j]
            assert report.b1 >= arr.n - 1
            assert report.b1 == local_b1_lower_bound(ma)


def test_against_per_character_oracle():
    rng = random.Random(83)
    for name in ("x3", "split_solvable", "nonpappus"):
        arr = builtin(name, (2, 3)) if name == "split_solvable" else builtin(name)
        flats = flats_of(arr)
        for _ in range(8):
            ma = MultiArrangement(arr, random_multiplicities(rng, arr.n))
            report = milnor_b1(ma, separated=True)
            expected = per_character_milnor(flats, ma.multiplicities)
            for j in range(1, report.N):
                assert report.eigen_multiplicities[j] == expected[j]
