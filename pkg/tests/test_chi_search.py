import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scsa import chi_search
from scsa.chi_search import (
    MonotonicityWarning,
    Plateau,
    SweepPoint,
    bracket_for_count,
    find_plateau,
    golden_section,
    is_monotone,
    optimize_chi,
    sweep,
    weyl_chi_for_target,
)
from scsa.errors import TargetCountUnreachableError, ZeroSignalError
from scsa.signals import Signal, generate, make_grid


@pytest.fixture(scope="module")
def gaussian():
    return generate("gaussian", make_grid(0, 1.5, 512))


class TestSweep:
    def test_jump_at_six(self, sech2):
        assert [p.count for p in sweep(sech2, [5.9, 6.1])] == [2, 3]

    def test_jump_at_two_on_wide_window(self):
        # the 1 -> 2 threshold drifts above 2 on a short periodic window; a
        # wide one brings it back
        s = generate("sech2", make_grid(-60, 72, 1024), x0=6)
        assert [p.count for p in sweep(s, [1.9, 2.1])] == [1, 2]

    def test_zero_signal(self, grid):
        zero = Signal(grid, np.zeros(grid.m))
        assert [p.count for p in sweep(zero, [0.5, 5.0, 500.0])] == [0, 0, 0]

    def test_fields(self, sech2):
        pts = sweep(sech2, [1.0, 6.0, 20.0])
        assert [p.chi for p in pts] == [1.0, 6.0, 20.0]
        assert all(p.count >= 0 and p.mse >= 0 for p in pts)
        assert pts[1].mse <= 1e-5

    def test_workers_match_serial(self, sech2):
        chis = np.geomspace(1, 100, 24)
        assert sweep(sech2, chis, workers=4) == sweep(sech2, chis)

    def test_monotone_on_log_grid(self, sech2):
        with warnings.catch_warnings():
            warnings.simplefilter("error", MonotonicityWarning)
            pts = sweep(sech2, np.geomspace(1, 500, 40))
        assert is_monotone(pts)

    def test_rejects_unsorted_or_nonpositive(self, sech2):
        with pytest.raises(ValueError):
            sweep(sech2, [3.0, 2.0])
        with pytest.raises(ValueError):
            sweep(sech2, [0.0, 2.0])

    def test_anomaly_flagged_not_raised(self, sech2, monkeypatch):
        fake = iter([2, 1])
        monkeypatch.setattr(
            chi_search, "evaluate", lambda s, c, eps: SweepPoint(c, next(fake), 0.0)
        )
        with pytest.warns(MonotonicityWarning):
            pts = sweep(sech2, [1.0, 2.0])
        assert [p.count for p in pts] == [2, 1]


def test_is_monotone():
    pts = [SweepPoint(float(i), c, 0.0) for i, c in enumerate([0, 1, 1, 3])]
    assert is_monotone(pts)
    assert not is_monotone(pts[::-1])
    assert is_monotone([])


class TestWeyl:
    def test_sech2_four(self, sech2):
        # int sech = pi, so chi_est = n**2 up to the window truncation
        assert weyl_chi_for_target(sech2, 4) == pytest.approx(16.0, rel=1e-2)

    def test_sech2_one(self, sech2):
        assert weyl_chi_for_target(sech2, 1) == pytest.approx(1.0, rel=1e-2)

    def test_estimate_inside_plateau(self, sech2):
        assert chi_search.count_at(sech2, weyl_chi_for_target(sech2, 4)) == 4

    def test_zero_signal(self, grid):
        with pytest.raises(ZeroSignalError):
            weyl_chi_for_target(Signal(grid, np.zeros(grid.m)), 3)

    def test_bad_target(self, sech2):
        with pytest.raises(ValueError):
            weyl_chi_for_target(sech2, 0)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 50), st.floats(0.1, 10.0))
    def test_scaling(self, n, amp):
        g = make_grid(0, 15, 64)
        base = generate("sech2", g, x0=6)
        scaled = Signal(g, amp * base.samples)
        assert weyl_chi_for_target(scaled, n) == pytest.approx(
            weyl_chi_for_target(base, n) / amp, rel=1e-9
        )
        assert weyl_chi_for_target(base, n) == pytest.approx(n * n * weyl_chi_for_target(base, 1))


class TestPlateau:
    def test_count_two(self, sech2):
        p = find_plateau(sech2, 2, (2, 30))
        assert p.count == 2
        assert p.chi_hi == pytest.approx(6.0, rel=1e-2)
        # lower end: threshold 2 on the infinite line, delayed by the periodic window
        assert 2.0 <= p.chi_lo <= 2.6

    def test_count_four(self, sech2):
        p = find_plateau(sech2, 4, (8, 32))
        assert p.chi_hi == pytest.approx(20.0, rel=1e-2)

    def test_count_three_starts_at_six(self, sech2):
        p = find_plateau(sech2, 3, (0.5, 30))
        assert p.chi_lo == pytest.approx(6.0, rel=1e-2)

    def test_endpoints_have_count(self, sech2):
        for n in (1, 2, 3, 5):
            p = find_plateau(sech2, n, bracket_for_count(sech2, n))
            assert p.chi_lo < p.chi_hi
            assert chi_search.count_at(sech2, p.chi_lo) == n
            assert chi_search.count_at(sech2, p.chi_hi) == n

    def test_bisection_resolution(self, sech2):
        p = find_plateau(sech2, 2, (2, 30))
        assert chi_search.count_at(sech2, p.chi_hi * (1 + 2e-3)) == 3

    def test_unreachable(self, sech2):
        with pytest.raises(TargetCountUnreachableError):
            find_plateau(sech2, 5, (1, 3))

    def test_bad_bracket(self, sech2):
        with pytest.raises(ValueError):
            find_plateau(sech2, 2, (5, 3))

    def test_bracket_for_count(self, sech2):
        lo, hi = bracket_for_count(sech2, 7)
        assert chi_search.count_at(sech2, lo) <= 7 <= chi_search.count_at(sech2, hi)


class TestOptimize:
    def test_reflectionless_end(self, sech2):
        p = find_plateau(sech2, 2, (2, 30))
        chi, j = optimize_chi(sech2, p)
        assert chi == pytest.approx(6.0, rel=1e-2)
        assert j <= 1e-5

    def test_degenerate_plateau(self, sech2):
        p = Plateau(2, 5.0 - 1e-6, 5.0)
        assert optimize_chi(sech2, p)[0] == 5.0 - 1e-6

    def test_budget_floor(self, sech2):
        with pytest.raises(ValueError):
            optimize_chi(sech2, Plateau(2, 3.0, 5.0), budget=7)

    def test_gaussian_interior(self, gaussian):
        p = find_plateau(gaussian, 4, bracket_for_count(gaussian, 4))
        chi, j = optimize_chi(gaussian, p)
        assert p.chi_lo <= chi <= p.chi_hi
        assert j < chi_search.evaluate(gaussian, p.chi_lo).mse
        assert j < chi_search.evaluate(gaussian, p.chi_hi).mse

    @pytest.mark.parametrize("budget", [8, 12, 20])
    def test_never_worse_than_grid(self, gaussian, budget):
        p = Plateau(3, 130.0, 200.0)
        _, j = optimize_chi(gaussian, p, budget=budget)
        coarse = min(chi_search.evaluate(gaussian, c).mse for c in np.linspace(130, 200, budget))
        assert j <= coarse


class TestGoldenSection:
    def test_parabola(self):
        x, fx, evals = golden_section(lambda t: (t - 1.3) ** 2, 0.0, 4.0, xtol=1e-9)
        assert x == pytest.approx(1.3, abs=1e-8)
        assert fx == min(v for _, v in evals)

    def test_boundary_minimum(self):
        x, _, _ = golden_section(lambda t: t, 2.0, 3.0, xtol=1e-10)
        assert x == pytest.approx(2.0, abs=1e-9)

    def test_evaluation_count(self):
        _, _, evals = golden_section(math.cos, 2.0, 4.0, xtol=1e-6)
        # interval shrinks by 0.618 per evaluation
        assert len(evals) <= 2 + math.ceil(math.log(2e-6 / 2.0) / math.log(0.618)) + 2
