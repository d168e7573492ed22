import math

import pytest

import hyerslab as hl


def test_exact_map_has_zero_defect():
    g = hl.Symmetric.exact(2, c=3.0)
    z = [[1.5], [0.25], [-0.75]]
    assert g.defect(z) == pytest.approx(0.0, abs=1e-15)
    assert g([[2.0], [-0.5]]) == pytest.approx(-3.0)


def test_kappa_matches_geometric_sum():
    for n in range(1, 6):
        for r in (-1.0, 0.0, 0.5, 2.0, 3.0):
            want = 2.0 * (2 ** (n * r) - 2 ** n) / (2 ** r - 2)
            assert hl.kappa(n, r) == pytest.approx(want, rel=1e-12)
            assert hl.stability_constant(n, r) == pytest.approx(2 / abs(2 ** r - 2), rel=1e-12)


def test_constant_refused_at_threshold():
    with pytest.raises(hl.ThresholdError):
        hl.stability_constant(3, 1.0)


def test_approximation_certified_and_bounded():
    g = hl.Symmetric.power_perturbed(2, c=1.5, beta=0.1, r=0.5)
    phi = hl.PowerControl(2, 1.0, 0.5)
    y = [[1.25], [-2.0]]
    res = hl.approximate(g, phi, y)
    assert res.certified
    assert res.value == pytest.approx(1.5 * 1.25 * -2.0, abs=1e-9)
    assert abs(res.g - res.value) <= res.bound + 1e-12


def test_divergent_control_rejected():
    g = hl.Symmetric.exact(2)
    with pytest.raises(hl.DivergentControl):
        hl.approximate(g, hl.PowerControl(2, 1.0, 0.5), [[1.0], [1.0]], mode=hl.Mode.Minus)


def test_direct_method_geometric():
    # b_k = 2^k (1 + 4^{-k}): c = 2, limit 1
    b = lambda k: 2.0 ** k * (1 + 4.0 ** -k)
    alpha = lambda k: abs(b(k + 1) - 2 * b(k))
    tail = lambda k: sum(2.0 ** (-j - 1) * alpha(j) for j in range(k, k + 200))
    res = hl.direct_method(b, 2.0, alpha, tail, hl.DirectMethodConfig(k_max=80, tol=1e-13))
    assert res.certified
    assert res.limit == pytest.approx(1.0, abs=1e-12)


def test_gajda_closed_form():
    eps = 6.0
    for x in (0.3, -0.7, 0.001, 1.0, 5.0, -2.5):
        k = 0 if abs(x) >= 1 else math.ceil(-math.log2(abs(x)) - 1e-15)
        while k > 0 and 2.0 ** (k - 1) * abs(x) >= 1:
            k -= 1
        want = k * x + math.copysign(2.0 ** (1 - k), x)
        assert hl.gajda(x, eps) == pytest.approx(want, rel=1e-14)
        value, tail = hl.gajda_series(x, eps, 60)
        assert abs(value - want) <= tail + 1e-13


def test_cauchy_defect_bounded():
    eps = 1.0
    for x in (-3.0, -0.4, 0.1, 0.9, 2.2):
        for y in (-1.1, 0.05, 0.6, 4.0):
            assert abs(hl.cauchy_defect(x, y, eps)) <= eps + 1e-14


def test_witness_beats_candidate():
    w = hl.find_witness(slope=1.0, eps=1.0, delta=4.0)
    assert w.valid
    assert w.x_star == 2.0 ** -w.depth


def test_nonuniqueness_sign_check():
    v = hl.nonuniqueness_family(2, 1.0, 1.0, 0.25, samples=512)
    assert v.valid and v.sampler_agrees
    v = hl.nonuniqueness_family(2, 1.0, 0.25, 0.5, samples=512)
    assert not v.valid and v.positive_orthant and v.sampler_agrees


def test_selftest_passes():
    results = hl.selftest()
    assert results and all(ok for _, ok, _ in results)
    assert not all(ok for _, ok, _ in hl.selftest(fault="zeta-branch"))
