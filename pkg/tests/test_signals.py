import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from scsa.errors import (
    InvalidDomainError,
    InvalidParameterError,
    NonEquidistantGridError,
    ParseError,
)
from scsa.signals import (
    Signal,
    generate,
    load_csv,
    make_grid,
    save_csv,
    shift_nonnegative,
)


class TestGrid:
    def test_unit_spacing(self):
        g = make_grid(0, 15, 16)
        assert g.dx == 1.0
        np.testing.assert_array_equal(g.points, np.arange(16.0))

    def test_endpoints(self):
        x = make_grid(0, 15, 512).points
        assert x[0] == 0.0 and x[-1] == 15.0
        assert x.size == 512

    @pytest.mark.parametrize("a, b, m", [(1, 0, 8), (0, 0, 8), (0, 1, 3), (0, 1, 4.5)])
    def test_invalid(self, a, b, m):
        with pytest.raises(InvalidDomainError):
            make_grid(a, b, m)

    def test_equidistant(self):
        x = make_grid(-3.2, 7.9, 101).points
        np.testing.assert_allclose(np.diff(x), (7.9 + 3.2) / 100, rtol=1e-12)


class TestGenerate:
    def test_sech2_peak(self, grid):
        s = generate("sech2", grid, x0=6)
        j = int(np.argmax(s.samples))
        assert grid.points[j] == pytest.approx(6.0, abs=grid.dx)
        # 6 is not a grid point; the peak sample is within dx**2 of 1
        assert s.samples[j] == pytest.approx(1.0, abs=grid.dx**2)
        on_grid = generate("sech2", make_grid(0, 15, 16), x0=6)
        assert on_grid.samples.max() == 1.0

    def test_sech2_symmetric(self):
        g = make_grid(-7.5, 7.5, 301)
        s = generate("sech2", g, x0=0.0)
        np.testing.assert_allclose(s.samples, s.samples[::-1], atol=1e-12, rtol=0)

    def test_gaussian_peak(self):
        g = make_grid(0, 1.5, 301)  # 0.75 is a grid point
        s = generate("gaussian", g, mu=0.75, sigma=0.1)
        assert s.samples.max() == pytest.approx(1 / (0.1 * math.sqrt(2 * math.pi)), rel=1e-12)
        assert s.samples.max() == pytest.approx(3.989, abs=1e-3)
        assert g.points[np.argmax(s.samples)] == pytest.approx(0.75)

    def test_sine_min(self):
        g = make_grid(0, 8, 4001)
        s = generate("sine", g, amplitude=2, omega=math.pi, phi=-0.5)
        # the minimum falls between samples; A * (omega * dx)**2 / 2 bounds the gap
        assert s.samples.min() == pytest.approx(-2.0, abs=2 * (math.pi * g.dx) ** 2 / 2)

    def test_chirp_frequency_ramp(self):
        g = make_grid(0, 10, 20001)
        s = generate("chirp", g, amplitude=1.0, f0=0.5, f1=3.0)
        assert np.abs(s.samples).max() <= 1.0
        # zero crossings: integral of the frequency = 0.5*10 + 0.5*2.5*10 = 17.5 cycles
        crossings = np.count_nonzero(np.diff(np.signbit(s.samples)))
        assert crossings == pytest.approx(35, abs=1)

    @pytest.mark.parametrize(
        "kind, params",
        [("gaussian", {"sigma": 0.0}), ("gaussian", {"sigma": -1}), ("chirp", {"f0": 0.0}),
         ("chirp", {"f1": -1.0}), ("nope", {}), ("sech2", {"bogus": 1})],
    )
    def test_invalid_parameters(self, grid, kind, params):
        with pytest.raises(InvalidParameterError):
            generate(kind, grid, **params)


class TestShift:
    def test_sine(self):
        g = make_grid(0, 2, 401)
        s = generate("sine", g, amplitude=2, omega=math.pi, phi=-0.5)
        shifted = shift_nonnegative(s)
        assert shifted.offset == pytest.approx(-2.0, abs=1e-4)
        assert shifted.signal.samples.min() == 0.0

    def test_identity(self, sech2):
        shifted = shift_nonnegative(sech2)
        assert shifted.offset == 0.0
        assert shifted.signal == sech2

    def test_constant(self):
        g = make_grid(0, 1, 8)
        shifted = shift_nonnegative(Signal(g, -np.ones(8)))
        assert shifted.offset == -1.0
        np.testing.assert_array_equal(shifted.signal.samples, np.zeros(8))

    @settings(max_examples=200, deadline=None)
    @given(arrays(np.float64, st.integers(4, 64), elements=st.floats(-1e6, 1e6)))
    def test_nonnegative_and_invertible(self, values):
        g = make_grid(0, 1, values.size)
        shifted = shift_nonnegative(Signal(g, values))
        assert np.all(shifted.signal.samples >= 0)
        # adding the offset back is exact up to the rounding of one subtraction
        tol = 2 * np.finfo(float).eps * max(abs(shifted.offset), np.abs(values).max(), 1e-300)
        np.testing.assert_allclose(shifted.original, values, rtol=0, atol=tol)


class TestCsv:
    def test_round_trip(self, tmp_path, sech2):
        path = tmp_path / "s.csv"
        save_csv(sech2, path)
        back = load_csv(path)
        assert back.grid.m == sech2.grid.m
        np.testing.assert_array_equal(back.samples, sech2.samples)
        np.testing.assert_allclose(back.x, sech2.x, rtol=1e-12)

    def test_headerless(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("".join(f"{0.5 * i},{i * i}\n" for i in range(6)))
        s = load_csv(path)
        assert s.grid.dx == 0.5
        np.testing.assert_array_equal(s.samples, [0, 1, 4, 9, 16, 25])

    def test_jitter_rejected(self, tmp_path, grid):
        x = grid.points.copy()
        x[100] += 1e-3
        path = tmp_path / "j.csv"
        path.write_text("x,value\n" + "".join(f"{float(v)!r},1.0\n" for v in x))
        with pytest.raises(NonEquidistantGridError):
            load_csv(path)

    def test_parse_errors(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,value\n0,1\n1,abc\n2,3\n3,4\n")
        with pytest.raises(ParseError):
            load_csv(path)
        path.write_text("0,1,2\n")
        with pytest.raises(ParseError):
            load_csv(path)
        path.write_text("x,value\n0,1\n")
        with pytest.raises(ParseError):
            load_csv(path)

    @settings(max_examples=50, deadline=None)
    @given(arrays(np.float64, st.integers(4, 40), elements=st.floats(-1e12, 1e12)),
           st.floats(-100, 100), st.floats(1e-3, 100))
    def test_round_trip_property(self, tmp_path_factory, values, a, width):
        path = tmp_path_factory.mktemp("rt") / "s.csv"
        s = Signal(make_grid(a, a + width, values.size), values)
        save_csv(s, path)
        back = load_csv(path)
        np.testing.assert_array_equal(back.samples, s.samples)
        assert back.grid == s.grid
