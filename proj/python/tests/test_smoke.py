import math

import pytest

import hgl


def test_hermite_values():
    assert hgl.hermite_eval(0, 0.0) == pytest.approx(math.pi ** -0.25, rel=1e-14)
    assert hgl.hermite_eval(2, 0.0) == pytest.approx(-(math.pi ** -0.25) / math.sqrt(2), rel=1e-14)


def test_quadrature_two_points():
    nodes, weights = hgl.gauss_hermite_rule(2)
    assert nodes[1] == pytest.approx(1 / math.sqrt(2), rel=1e-14)
    assert sum(weights) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_analyze_gaussian_roundtrip():
    s = hgl.analyze(lambda x: complex(math.exp(-x[0] ** 2 / 2)), 1, 4)
    assert abs(s.get([0]) - math.pi ** 0.25) < 1e-10
    assert abs(hgl.synthesize(s, [1.0]) - math.exp(-0.5)) < 1e-9


def test_apply_H_eigenvalue():
    s = hgl.HermiteSeries(2, 4)
    s.set([1, 2], 1.0)
    assert hgl.apply_H(s, 2).get([1, 2]) == pytest.approx(64.0)


def test_norm_sequence_powers_of_three():
    s = hgl.HermiteSeries(1, 3)
    s.set([1], 1.0)
    seq = hgl.log_norm_sequence(s, 3)
    assert [round(math.exp(v)) for _, v in seq] == [1, 3, 9, 27]


def test_envelope_example():
    assert math.exp(hgl.log_envelope_E(3, 1.0, 1.0)) == pytest.approx(12.64, abs=0.01)


def test_classify_synthetic_flat():
    report = hgl.classify(hgl.make_preset("synthetic_flat(1,1,80)"))
    assert report["kind"] == "FlatSigma"
    assert report["flavor"] == "Roumieu"
    assert report["parameter"] == pytest.approx(1.0, rel=0.1)


def test_classify_finite():
    assert hgl.classify(hgl.make_preset("hermite(7)"))["kind"] == "FiniteExpansion"


def test_cross_validate_ground_state():
    s = hgl.HermiteSeries(1, 0)
    s.set([0], 1.0)
    cv = hgl.cross_validate(s, 1.0)
    assert cv["agrees"]
    assert cv["coefficient_fit"]["verdict"] == "Beurling"


def test_lemma_fsr_report():
    assert hgl.check_lemma_fsr(1.0)["pass"]


def test_json_roundtrip():
    s = hgl.make_preset("finite_random(3,7)")
    t = hgl.HermiteSeries.from_json(s.to_json())
    assert t.coefficients() == s.coefficients()


def test_bad_preset_raises():
    with pytest.raises(ValueError):
        hgl.make_preset("nonsense(1)")
