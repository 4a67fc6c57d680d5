from fractions import Fraction

import pytest

import tropitheta as tt

ELLIPTIC3 = {"Pmat": [[12]], "L": [[3]], "ell": [0]}
NA = {"Pmat": [[12]], "L": [[3]], "Tmat": [[[[12, 1]]]], "cBasis": [[[18, 1]]]}


def test_polarization_of_degree_three():
    r = tt.polarization(ELLIPTIC3)
    assert r["positive_definite"] is True
    assert r["polarization"]["type"] == ["3"]


def test_theta_values_are_exact():
    # θ_1 = x + 2 on [0, 2] and -2x + 8 on [2, 12] for varpi 12, d = 3
    values = tt.theta(ELLIPTIC3, [1], [Fraction(1, 2), 3])
    assert values == [Fraction(5, 2), Fraction(2)]


def test_conventions_differ_by_a_constant():
    q = tt.theta(ELLIPTIC3, [1], [0, Fraction(7, 3)])
    lg = tt.theta(ELLIPTIC3, [1], [0, Fraction(7, 3)], convention="LAMBDA_GAMMA")
    assert q[0] - lg[0] == q[1] - lg[1]


def test_example_degrees():
    two = tt.example45(2)
    assert two["unimodular"] is True and two["injective"] is False
    three = tt.example45(3)
    assert three["faithful"] is True
    assert [tt.fraction(x) for x in three["edge_lattice_lengths"]] == [4, 4, 4]
    assert set(three.files) == {"theta.svg", "image.svg"}
    assert three.files["image.svg"].startswith("<svg")


def test_certify_status_and_witness():
    assert tt.certify(ELLIPTIC3).status == 0
    r = tt.certify({"Pmat": [[12]], "L": [[2]]})
    assert r.status == 3
    assert r["faithful"] is False
    assert r["injective"] is False


def test_sampled_certify_in_two_dimensions():
    square = {"Pmat": [[1, 0], [0, 1]], "L": [[3, 0], [0, 3]]}
    assert tt.certify(square, mode="sampled", resolution=6)["faithful"] is True


def test_voronoi_of_square_lattice():
    r = tt.voronoi(G=[[1, 0], [0, 1]], d=[2, 2])
    assert r["voronoi"]["relevant_count"] == 4
    assert "decomposition" in r


def test_lift_matches_theta():
    r = tt.lift(NA, b=[1], points=[0, Fraction(7, 2)], window=5)
    assert r["verified"] is True
    for c in r["checks"]:
        assert c["tropicalized"] == c["theta"]


def test_surjective_lift():
    r = tt.lift(NA, targets=[0, Fraction(1, 2), None], window=5)
    assert r["surjective"]["verified"] is True


def test_errors_carry_kind():
    with pytest.raises(tt.Error) as info:
        tt.polarization({"Pmat": [[12]], "L": [[-3]]})
    assert info.value.exit_code == 2
    with pytest.raises(tt.Error) as info:
        tt.polarization({"Pmat": [[12]]})
    assert info.value.kind == "SchemaError"
    assert info.value.exit_code == 1
