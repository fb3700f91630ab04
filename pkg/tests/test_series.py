import math
from fractions import Fraction

import pytest

from bridgelab.classes import forests
from bridgelab.enumeration import (
    enumerate_all,
    enumerate_connected,
    labelled_count_from_unlabelled,
    labelled_filter_oracle,
    rooted_connected_count,
)
from bridgelab.errors import CapabilityError
from bridgelab.graphcore import frag
from bridgelab.series import (
    Ratio,
    Sequence,
    euler_transform,
    labelled_forest_frag_expectation,
    labelled_forests_seq,
    otter_trees_seq,
    renyi_ratio,
    rooted_trees_seq,
    tau_limit_estimate,
    tau_ratio,
    unlabelled_forests_seq,
)

from oracles import brute_rooted_canon, is_acyclic, labelled_graphs


def labelled_forests(n):
    return [g for g in labelled_graphs(n) if is_acyclic(g)]


def test_rooted_trees_brute_force():
    brute = []
    for n in range(1, 6):
        keys = {brute_rooted_canon(g, r) for g in labelled_forests(n) if g.is_connected() for r in range(n)}
        brute.append(len(keys))
    assert brute == [1, 1, 2, 4, 9]
    assert rooted_trees_seq(5).values == (1, 1, 2, 4, 9)
    assert rooted_trees_seq(1)[1] == 1


def test_sequences_match_enumeration():
    r = rooted_trees_seq(10)
    t = otter_trees_seq(10)
    f = euler_transform(t)
    f_lab = labelled_forests_seq(10)
    for n in range(1, 11):
        assert r[n] == rooted_connected_count(forests(), n)
        assert t[n] == len(enumerate_connected(forests(), n))
        assert f[n] == len(enumerate_all(forests(), n))
        assert f_lab[n] == labelled_count_from_unlabelled(enumerate_all(forests(), n))


def test_tree_and_forest_values():
    assert otter_trees_seq(7).values == (1, 1, 1, 2, 3, 6, 11)
    assert otter_trees_seq(1)[1] == 1
    assert unlabelled_forests_seq(8).values == (1, 2, 3, 6, 10, 20, 37, 76)
    # published values at n = 20
    assert otter_trees_seq(20)[20] == 823065
    assert unlabelled_forests_seq(20)[20] == 1977878


def test_euler_transform_zero_and_simple():
    assert euler_transform(Sequence("zero", (0, 0, 0, 0))).values == (0, 0, 0, 0)
    # one object of each size: multisets are integer partitions
    assert euler_transform(Sequence("ones", (1,) * 10)).values == (1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_labelled_forests_against_filter():
    assert labelled_forests_seq(4)[4] == 38 == labelled_filter_oracle(forests(), 4).row.labelled_total
    assert labelled_forests_seq(1)[1] == 1
    assert labelled_forests_seq(5)[5] == len(labelled_forests(5)) == 291


def test_tau_examples():
    assert tau_ratio(5).fraction == Fraction(3, 10)
    assert str(tau_ratio(5).decimal()) == "0.3"
    assert tau_ratio(1).fraction == 1


def test_renyi_examples():
    forests3 = labelled_forests(3)
    trees3 = [g for g in forests3 if g.is_connected()]
    assert renyi_ratio(3).fraction == Fraction(len(trees3), len(forests3)) == Fraction(3, 7)
    assert renyi_ratio(2).fraction == Fraction(1, 2)


def test_renyi_convergence_is_monotone_evidence():
    limit = math.exp(-0.5)
    assert abs(float(renyi_ratio(300)) - limit) < abs(float(renyi_ratio(50)) - limit)


def test_tau_ratio_moves_toward_its_limit():
    # the exact ratios increase with n; see the acceptance suite for the stated target
    values = [float(tau_ratio(n)) for n in (50, 100, 200, 400)]
    assert values == sorted(values)


@pytest.mark.parametrize("n", range(1, 7))
def test_frag_expectation_against_brute_force(n):
    fs = labelled_forests(n)
    expected = Fraction(sum(frag(g) for g in fs), len(fs))
    assert labelled_forest_frag_expectation(n).fraction == expected


def test_frag_examples():
    assert labelled_forest_frag_expectation(1).fraction == 0
    assert labelled_forest_frag_expectation(3).fraction == Fraction(5, 7)
    assert labelled_forest_frag_expectation(40).fraction < 2


def test_frag_bound_up_to_cap():
    assert all(labelled_forest_frag_expectation(n).fraction < 2 for n in range(2, 61))


def test_caps():
    with pytest.raises(CapabilityError):
        rooted_trees_seq(1001)
    with pytest.raises(CapabilityError):
        labelled_forests_seq(401)
    with pytest.raises(CapabilityError):
        renyi_ratio(1)
    with pytest.raises(CapabilityError):
        labelled_forest_frag_expectation(61)


def test_ratio_rendering():
    r = Ratio.of(Fraction(2, 3))
    assert r.as_dict() == {"num": "2", "den": "3", "dec": "0.66666666666666666667"}
    assert len(r.dec.lstrip("0.")) >= 15
    assert Sequence("x", (4, 5)).bfile() == "1 4\n2 5\n"


def test_tau_ratio_limit_estimate():
    # extrapolations from (250, 500) and (400, 800) agree to 1e-4; the limit sits near 0.5228
    a = float(tau_limit_estimate(250))
    b = float(tau_limit_estimate(400))
    assert abs(a - b) < 1e-4
    assert abs(b - 0.5228) < 1e-3
