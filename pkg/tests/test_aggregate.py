import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from webtopo.aggregate import (
    REFERENCE_FIT,
    CurveCollection,
    QuadraticLogFit,
    average_curves,
    compare_to_reference,
    estimate_powerlaw_exponent,
    eval_reference,
    eval_reference_power_form,
    fit_quadratic_loglog,
    min_support_count,
)
from webtopo.curve import MetricCurve
from webtopo.errors import FitError, TopologyError

REFERENCE_COEFFS = (-0.3579, 2.9432, -1.1907)
GRID = np.array([2, 5, 10, 50, 100, 500], dtype=float)


def _exact_reference_samples(xs):
    a, b, c = REFERENCE_COEFFS
    lx = np.log10(xs)
    return MetricCurve(xs, 10 ** (a * lx**2 + b * lx + c))


# --- averaging ------------------------------------------------------------

def _collection(n_curves, n_support, x, value, ratio=Fraction(2, 3)):
    curves = []
    for i in range(n_curves):
        pts = {1.0: 0.5}
        if i < n_support:
            pts[x] = value
        curves.append((f"site{i}", MetricCurve.from_dict(pts)))
    return CurveCollection(curves, ratio)


def test_threshold_boundary_included():
    avg = average_curves(_collection(18, 12, 5.0, 0.1))
    assert avg[5.0] == pytest.approx(0.1, rel=1e-15)


def test_below_threshold_omitted():
    avg = average_curves(_collection(18, 11, 7.0, 0.1))
    assert 7.0 not in avg
    assert 1.0 in avg


def test_mean_only_over_supporting_curves():
    curves = [("a", MetricCurve.from_dict({3: 0.2})), ("b", MetricCurve.from_dict({3: 0.4})),
              ("c", MetricCurve.from_dict({3: 0.0}))]
    assert average_curves(CurveCollection(curves))[3] == pytest.approx(0.3)


def test_single_curve_is_identity():
    c = MetricCurve.from_dict({1: 0.5, 2: 0.25, 4: 0.25})
    assert average_curves(CurveCollection([("only", c)])) == c


def test_ratio_one_needs_all_curves():
    curves = [("a", MetricCurve.from_dict({1: 1, 2: 1})), ("b", MetricCurve.from_dict({2: 3}))]
    avg = average_curves(CurveCollection(curves, 1.0))
    assert avg.as_dict() == {2.0: 2.0}


def test_min_support_count():
    assert min_support_count(Fraction(2, 3), 18) == 12
    assert min_support_count(2 / 3, 18) == 12
    assert min_support_count(2 / 3, 1) == 1
    assert min_support_count(0.5, 5) == 3


def test_empty_collection():
    with pytest.raises(TopologyError):
        CurveCollection([])


curve_dicts = st.dictionaries(st.integers(1, 15), st.floats(0.001, 100), min_size=1, max_size=10)


@settings(max_examples=100, deadline=None)
@given(st.lists(curve_dicts, min_size=1, max_size=8), st.integers(0, 1000),
       st.sampled_from([2.0, 0.5, 10.0]))
def test_average_permutation_invariant_and_scale_equivariant(dicts, seed, factor):
    curves = [(str(i), MetricCurve.from_dict(d)) for i, d in enumerate(dicts)]
    shuffled = curves[:]
    random.Random(seed).shuffle(shuffled)
    base = average_curves(CurveCollection(curves))
    assert average_curves(CurveCollection(shuffled)) == base
    scaled = average_curves(CurveCollection([(n, c.scaled(factor)) for n, c in curves]))
    assert np.array_equal(scaled.x, base.x)
    assert np.allclose(scaled.y, base.y * factor, rtol=1e-12)


# --- fitting ----------------------------------------------------------------

def test_fit_recovers_exact_quadratic():
    fit = fit_quadratic_loglog(_exact_reference_samples(GRID))
    for got, want in zip((fit.a, fit.b, fit.c), REFERENCE_COEFFS):
        assert abs(got - want) < 1e-9
    assert fit.fit_domain == (2.0, 500.0)
    assert fit.residual_rms < 1e-9


def test_fit_constant_curve():
    fit = fit_quadratic_loglog(MetricCurve(GRID, np.full(len(GRID), 7.0)))
    assert abs(fit.a) < 1e-9 and abs(fit.b) < 1e-9
    assert abs(fit.c - math.log10(7)) < 1e-9


def test_fit_noisy_dense_curve():
    xs = np.arange(2.0, 501.0)
    rng = np.random.default_rng(2024)
    noisy = _exact_reference_samples(xs).y * (1 + rng.uniform(-0.05, 0.05, len(xs)))
    fit = fit_quadratic_loglog(MetricCurve(xs, noisy))
    for got, want in zip((fit.a, fit.b, fit.c), REFERENCE_COEFFS):
        assert abs(got - want) <= 0.05


def test_fit_residual_self_consistent():
    rng = np.random.default_rng(1)
    curve = MetricCurve(GRID, _exact_reference_samples(GRID).y * rng.uniform(0.8, 1.2, 6))
    fit = fit_quadratic_loglog(curve)
    resid = np.log10(curve.y) - fit.log10(curve.x)
    assert fit.residual_rms == pytest.approx(float(np.sqrt(np.mean(resid**2))), abs=1e-12)


def test_fit_errors():
    with pytest.raises(FitError):
        fit_quadratic_loglog(MetricCurve([1, 2], [1, 2]))
    with pytest.raises(FitError):
        fit_quadratic_loglog(MetricCurve([1, 2, 3, 4], [0, 0, 1, 1]))


def test_fit_json_round_trip():
    fit = fit_quadratic_loglog(_exact_reference_samples(GRID))
    assert QuadraticLogFit.from_dict(fit.to_dict()) == fit
    assert QuadraticLogFit.from_dict(REFERENCE_FIT.to_dict()) == REFERENCE_FIT


# --- reference curve --------------------------------------------------------

@pytest.mark.parametrize("x,log_value", [(10, 1.3946), (1, -1.1907), (100, 3.2641)])
def test_eval_reference(x, log_value):
    assert abs(eval_reference(x) - 10**log_value) <= 1e-9 * 10**log_value


def test_eval_reference_rounded_values():
    assert eval_reference(10) == pytest.approx(24.80, abs=0.01)
    assert eval_reference(1) == pytest.approx(0.0645, abs=1e-4)
    assert eval_reference(100) == pytest.approx(1837, abs=1)


def test_eval_reference_rejects_nonpositive():
    with pytest.raises(ValueError):
        eval_reference(0)


def test_power_form_agrees_at_low_degree():
    # the two printed forms drift apart as log10(x)^2 grows
    for x in np.linspace(1, 10, 50):
        assert eval_reference_power_form(x) == pytest.approx(eval_reference(x), rel=0.02)
    assert eval_reference(1000) / eval_reference_power_form(1000) > 1.07


def test_compare_to_itself_and_scaled():
    ref = _exact_reference_samples(GRID)
    assert compare_to_reference(ref).rms == pytest.approx(0, abs=1e-12)
    report = compare_to_reference(ref.scaled(10))
    assert report.rms == pytest.approx(1.0, abs=1e-12)
    assert report.max_abs == pytest.approx(1.0, abs=1e-12)


def test_compare_counts_zero_points_and_respects_domain():
    curve = MetricCurve([0.5, 1, 2, 3], [1, 0, eval_reference(2), 0])
    report = compare_to_reference(curve)
    assert (report.n_compared, report.n_zero_excluded) == (1, 2)
    with pytest.raises(FitError):
        compare_to_reference(MetricCurve([1, 2], [0, 0]))


# --- power-law exponent -----------------------------------------------------

def test_powerlaw_exact_and_flat():
    ks = np.arange(1.0, 200.0)
    assert abs(estimate_powerlaw_exponent(MetricCurve(ks, ks**-2.5)) - 2.5) < 1e-9
    assert abs(estimate_powerlaw_exponent(MetricCurve(ks, np.full(len(ks), 0.3)))) < 1e-9


def test_powerlaw_needs_two_points():
    with pytest.raises(FitError):
        estimate_powerlaw_exponent(MetricCurve([1, 2, 3], [1, 1, 1]), k_min=3)
