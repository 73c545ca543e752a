import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import erfc

from dirac1d.errors import ArgumentError, ResolutionError
from dirac1d.models import Grid, Mat2, to_momentum
from dirac1d.observables import (
    classical_velocity_mean,
    energy_weights,
    mean_momentum,
    mean_position,
    momentum_decomposition,
)
from dirac1d.spectral import evolve_position, project
from dirac1d.wavepackets import (
    PacketSpec,
    check_resolution,
    make_custom,
    make_gauss10,
    make_gauss11,
    make_packet,
    parity,
    posneg_parts,
    translate,
)

from conftest import pair_velocity_oracle, random_field


class TestPacketSpec:
    def test_defaults(self):
        spec = PacketSpec()
        assert spec.kind == "gauss11"
        assert spec.extent == 16.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": "gauss12"},
            {"a": 0.0},
            {"b": -1.0},
            {"w1": 0, "w2": 0},
            {"x0": np.inf},
            {"w1": complex("nan")},
            {"w2": np.inf},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ArgumentError):
            PacketSpec(**kwargs)

    @pytest.mark.parametrize(
        "kind, width",
        [("gauss11", 2.0), ("gauss11_boosted", 2.0), ("gauss10", np.sqrt(2)), ("posneg_pair", 2.0)],
    )
    def test_canonical_widths_are_fixed(self, kind, width):
        assert PacketSpec(kind=kind, a=7.0).width == width

    def test_pair_width_follows_exponent(self):
        spec = PacketSpec(kind="posneg_pair", a=7.0, b=9.0)
        assert spec.width == 3.0
        assert spec.extent == 24.0


class TestCanonicalPackets:
    def test_normalized(self, canonical):
        _, f = canonical
        assert f.norm2() == pytest.approx(1.0, abs=1e-10)

    def test_gauss11_moments(self, gauss11):
        assert abs(mean_position(gauss11)) <= 1e-12
        assert abs(mean_momentum(to_momentum(gauss11))) <= 1e-12

    def test_gauss11_is_sigma1_eigenfield(self, gauss11, boosted):
        for f in (gauss11, boosted):
            assert np.array_equal(f.psi1, f.psi2)

    def test_gauss11_profile(self, grid, gauss11):
        expected = (1 / (32 * np.pi)) ** 0.25 * np.exp(-grid.x**2 / 16)
        assert np.max(np.abs(gauss11.psi1 - expected)) <= 1e-15

    def test_boosted_mean_momentum(self, boosted):
        assert mean_momentum(to_momentum(boosted)) == pytest.approx(0.75, abs=1e-9)

    def test_boosted_momentum_tail(self, grid, boosted):
        rho = to_momentum(boosted).pointwise_norm2()
        negative = np.sum(rho[grid.p < 0]) + 0.5 * rho[0]
        assert negative * grid.dp == pytest.approx(0.5 * erfc(0.75 * np.sqrt(8)), abs=5e-5)
        assert negative * grid.dp < 2e-3

    def test_boosted_positive_energy_weight(self, boosted):
        def rho_pos(p):
            return 0.5 * (1 + p / np.sqrt(1 + p * p)) * 2 * np.sqrt(2 / np.pi) * np.exp(-8 * (p - 0.75) ** 2)

        oracle = quad(rho_pos, -np.inf, np.inf)[0]
        w_pos, w_neg = energy_weights(to_momentum(boosted))
        assert w_pos == pytest.approx(oracle, abs=1e-9)
        assert w_pos == pytest.approx(0.79, abs=0.01)
        assert w_pos + w_neg == pytest.approx(1.0, abs=1e-10)

    def test_gauss10(self, grid, gauss10):
        assert np.all(gauss10.psi2 == 0)
        assert np.max(np.abs(parity(gauss10).values - gauss10.values)) <= 1e-15

    def test_posneg_parts(self, grid, posneg):
        part_pos, part_neg = posneg_parts(grid)
        assert part_pos.norm2() == pytest.approx(part_neg.norm2(), abs=1e-6)
        assert mean_momentum(to_momentum(part_pos)) == pytest.approx(0.8, abs=0.05)
        assert mean_momentum(to_momentum(part_neg)) == pytest.approx(-0.8, abs=0.05)
        assert mean_momentum(to_momentum(posneg)) == pytest.approx(0.0, abs=1e-6)

    def test_posneg_projection_recovers_parts(self, grid, posneg):
        part_pos, part_neg = posneg_parts(grid)
        g = to_momentum(posneg)
        assert np.max(np.abs(project(g, "pos").values - to_momentum(part_pos).values)) <= 1e-12
        assert np.max(np.abs(project(g, "neg").values - to_momentum(part_neg).values)) <= 1e-12

    def test_posneg_parts_move_together(self, grid):
        oracle = pair_velocity_oracle()
        for part in posneg_parts(grid):
            v = classical_velocity_mean(to_momentum(part))
            assert v == pytest.approx(oracle, abs=1e-8)
            assert 0.58 < v < 0.63
        assert 4 / np.sqrt(41) == pytest.approx(oracle, rel=0.05)

    def test_pair_parameters_reach_the_field(self, grid, posneg):
        shifted = make_packet(grid, PacketSpec(kind="posneg_pair", p0=1.5))
        pair = momentum_decomposition(to_momentum(shifted))
        p = grid.p
        assert np.sum(p * pair.rho_pos) / np.sum(pair.rho_pos) == pytest.approx(1.5, abs=0.05)
        assert np.sum(p * pair.rho_neg) / np.sum(pair.rho_neg) == pytest.approx(-1.5, abs=0.05)

        narrow = make_packet(grid, PacketSpec(kind="posneg_pair", b=2.0))
        assert not np.array_equal(narrow.values, posneg.values)
        assert np.array_equal(make_packet(grid, PacketSpec(kind="posneg_pair")).values, posneg.values)

    def test_unresolved_grid(self):
        with pytest.raises(ResolutionError):
            make_gauss11(Grid(64, 8.0))

    def test_under_sampled_grid(self):
        with pytest.raises(ResolutionError):
            make_gauss10(Grid(16, 64.0))


class TestCustomPackets:
    def test_custom_weights_are_normalized(self, small_grid):
        spec = PacketSpec(kind="custom", a=1.5, x0=2.0, q=0.5, w1=3, w2=4j)
        f = make_custom(small_grid, spec)
        assert f.norm2() == pytest.approx(1.0, abs=1e-10)
        ratio = f.psi2[small_grid.n // 2] / f.psi1[small_grid.n // 2]
        assert ratio == pytest.approx(4j / 3, rel=1e-12)
        assert mean_position(f) == pytest.approx(2.0, abs=1e-9)
        assert mean_momentum(to_momentum(f)) == pytest.approx(0.5, abs=1e-9)

    def test_schrodinger_kind_has_upper_component_only(self, small_grid):
        f = make_packet(small_grid, PacketSpec(kind="schrodinger", a=2.0))
        assert np.all(f.psi2 == 0)
        assert f.norm2() == pytest.approx(1.0, abs=1e-10)

    def test_translation(self, grid, gauss11):
        moved = translate(gauss11, 5.0)
        assert mean_position(moved) == pytest.approx(5.0, abs=1e-9)
        via_spec = make_packet(grid, PacketSpec(kind="gauss11", x0=5.0))
        assert np.max(np.abs(via_spec.values - moved.values)) <= 1e-14

    def test_check_resolution_passes_resolved_field(self, gauss11):
        assert check_resolution(gauss11) is gauss11

    def test_check_resolution_rejects_nan(self, gauss11):
        with pytest.raises(ResolutionError, match="non-finite"):
            check_resolution(gauss11.replace(gauss11.values * np.nan))


class TestParity:
    def test_gauss11_is_not_invariant(self, gauss11):
        mirrored = parity(gauss11)
        overlap = abs(np.sum(np.conj(mirrored.values) * gauss11.values) * gauss11.grid.dx)
        assert overlap < 1 - 1e-3
        assert np.allclose(mirrored.psi2, -gauss11.psi2)

    def test_involution(self, small_grid):
        f = random_field(small_grid, 21)
        assert np.array_equal(parity(parity(f)).values, f.values)
        assert parity(f).norm2() == pytest.approx(f.norm2(), rel=1e-14)

    def test_sigma3_maps_h0_to_mirror(self):
        s3 = Mat2.sigma3()
        h = Mat2(1, 0.7, 0.7, -1)
        assert s3 @ h @ s3 == Mat2(1, -0.7, -0.7, -1)

    @pytest.mark.parametrize("t", [1.0, 5.0, 20.0])
    def test_commutes_with_evolution(self, canonical, t):
        _, f = canonical
        lhs = parity(evolve_position(f, t)).values
        rhs = evolve_position(parity(f), t).values
        assert np.max(np.abs(lhs - rhs)) <= 1e-10

    @pytest.mark.parametrize("t", [0.0, 3.0, 50.0])
    def test_gauss10_stays_invariant(self, gauss10, t):
        f = evolve_position(gauss10, t)
        assert np.max(np.abs(parity(f).values - f.values)) <= 1e-10
