import numpy as np
import pytest

from dirac1d.errors import ArgumentError
from dirac1d.models import Grid
from dirac1d.schrodinger import (
    NonrelGaussian,
    ScalarField,
    evolve_schrodinger,
    make_nonrel_packet,
    nonrel_density,
    nonrel_width,
)
from dirac1d.spectral import SchrodingerPropagator
from dirac1d.wavepackets import PacketSpec, make_packet


class TestNonrelGaussian:
    @pytest.mark.parametrize("a", [0.0, -1.0, np.nan, np.inf])
    def test_rejects_width(self, a):
        with pytest.raises(ArgumentError):
            NonrelGaussian(a)

    def test_rejects_nonfinite_centre(self):
        with pytest.raises(ArgumentError):
            NonrelGaussian(1.0, x0=np.inf)

    def test_width_law(self):
        g = NonrelGaussian(2.0)
        assert nonrel_width(g, 0.0) == 2.0
        assert nonrel_width(g, 8.0) == pytest.approx(2 * np.sqrt(2), rel=1e-15)

    def test_density_is_normalized(self, grid):
        rho = nonrel_density(NonrelGaussian(2.0, x0=3.0, q=0.4), 5.0, grid.x)
        assert np.sum(rho) * grid.dx == pytest.approx(1.0, abs=1e-12)
        assert grid.x[np.argmax(rho)] == pytest.approx(5.0, abs=grid.dx)


class TestScalarField:
    def test_shape_checked(self, small_grid):
        with pytest.raises(ArgumentError):
            ScalarField(small_grid, np.zeros(small_grid.n + 1))

    def test_values_are_read_only(self, small_grid):
        f = ScalarField(small_grid, np.ones(small_grid.n))
        with pytest.raises(ValueError):
            f.values[0] = 2.0

    def test_from_spinor_takes_upper_component(self, grid):
        f = make_packet(grid, PacketSpec("schrodinger", a=2.0))
        scalar = ScalarField.from_spinor(f)
        np.testing.assert_array_equal(scalar.values, f.psi1)
        assert scalar.norm2() == pytest.approx(1.0, abs=1e-12)


class TestEvolution:
    def test_initial_packet(self, grid):
        f0 = make_nonrel_packet(grid, NonrelGaussian(2.0, x0=1.5))
        assert f0.norm2() == pytest.approx(1.0, abs=1e-12)
        assert f0.mean_position() == pytest.approx(1.5, abs=1e-12)
        assert f0.width() == pytest.approx(2.0, abs=1e-12)

    def test_zero_time_is_identity(self, grid):
        f0 = make_nonrel_packet(grid, NonrelGaussian(2.0, q=0.3))
        f = evolve_schrodinger(f0, 0.0)
        np.testing.assert_allclose(f.values, f0.values, atol=1e-13)
        assert f.time == 0.0

    def test_spreading_matches_closed_form(self, grid):
        g = NonrelGaussian(2.0)
        f = evolve_schrodinger(make_nonrel_packet(grid, g), 8.0)
        assert f.time == 8.0
        assert f.width() == pytest.approx(2 * np.sqrt(2), abs=1e-6)
        np.testing.assert_allclose(f.density(), nonrel_density(g, 8.0, grid.x), atol=1e-10)

    def test_width_independent_of_momentum(self, grid):
        widths = [
            evolve_schrodinger(make_nonrel_packet(grid, NonrelGaussian(2.0, q=q)), 8.0).width()
            for q in (0.0, 0.5)
        ]
        assert widths[0] == pytest.approx(widths[1], abs=1e-10)

    def test_centre_moves_at_momentum(self, grid):
        f0 = make_nonrel_packet(grid, NonrelGaussian(2.0, q=0.5))
        f = evolve_schrodinger(f0, 8.0)
        assert f.mean_position() == pytest.approx(4.0, abs=1e-10)
        assert f.norm2() == pytest.approx(1.0, abs=1e-12)

    def test_plane_wave_phase(self, small_grid):
        k = 8 * small_grid.dp
        t = 3.0
        f0 = ScalarField(small_grid, np.exp(1j * k * small_grid.x))
        f = evolve_schrodinger(f0, t)
        expected = np.exp(1j * (k * small_grid.x - 0.5 * k * k * t))
        np.testing.assert_allclose(f.values, expected, atol=1e-12)

    def test_rejects_nonfinite_time(self, small_grid):
        f0 = ScalarField(small_grid, np.ones(small_grid.n))
        with pytest.raises(ArgumentError):
            evolve_schrodinger(f0, np.nan)

    def test_agrees_with_spinor_propagator(self):
        grid = Grid(512, 64.0)
        f0 = make_packet(grid, PacketSpec("schrodinger", a=2.0, q=0.3))
        spinor = SchrodingerPropagator().evolve_position(f0, 6.0)
        scalar = evolve_schrodinger(ScalarField.from_spinor(f0), 6.0)
        np.testing.assert_allclose(scalar.values, spinor.psi1, atol=1e-12)
        np.testing.assert_allclose(spinor.psi2, 0.0, atol=1e-12)
