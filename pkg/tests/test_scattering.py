import math

import pytest
from hypothesis import given, settings, strategies as st

from matterwave import (
    DEBROGLIE,
    MAXWELL,
    GeneralizedIndex,
    GridResolutionError,
    Layer,
    LayerStack,
    OpacityError,
    SingularPotentialError,
    generalized_index,
    numerov_oracle,
    step_coefficients,
    transfer_matrix,
)

HBAR = 1.054571817e-34


@pytest.fixture
def E(std_mode):
    return HBAR * std_mode.omega_v


class TestGeneralizedIndex:
    def test_zero_potential(self, std_mode):
        gi = generalized_index(std_mode, 0.0)
        assert gi.value == pytest.approx(std_mode.n, rel=1e-15)
        assert gi.propagating

    def test_three_quarters_doubles_index(self, std_mode, E):
        gi = generalized_index(std_mode, 0.75 * E)
        assert gi.value == pytest.approx(2.0 * std_mode.n, rel=1e-14)

    def test_evanescent_branch(self, std_mode, E):
        gi = generalized_index(std_mode, 2.0 * E)
        assert gi.evanescent
        assert gi.value.real == 0.0
        assert gi.value.imag == pytest.approx(std_mode.n, rel=1e-14)

    def test_debroglie_reciprocal(self, std_mode, E):
        for U in (0.0, 0.5 * E, -1.0 * E):
            gm = generalized_index(std_mode, U, MAXWELL)
            gd = generalized_index(std_mode, U, DEBROGLIE)
            assert gd.value == pytest.approx(1.0 / gm.value, rel=1e-14)

    def test_debroglie_evanescent_decaying_sign(self, std_mode, E):
        gm = generalized_index(std_mode, 2.0 * E, MAXWELL)
        gd = generalized_index(std_mode, 2.0 * E, DEBROGLIE)
        assert gd.value.imag > 0
        assert gd.value == pytest.approx(1j / abs(gm.value), rel=1e-14)

    def test_singular_at_particle_energy(self, std_mode, E):
        with pytest.raises(SingularPotentialError):
            generalized_index(std_mode, E)
        with pytest.raises(SingularPotentialError):
            generalized_index(std_mode, E * (1.0 + 1e-13))

    def test_unknown_convention(self, std_mode):
        with pytest.raises(ValueError):
            generalized_index(std_mode, 0.0, "fresnel")


class TestStepCoefficients:
    def n(self, value, evanescent=False):
        return GeneralizedIndex(value=complex(value), evanescent=evanescent)

    def test_exact_fractions(self):
        res = step_coefficients(self.n(1.0), self.n(2.0))
        assert res.r == pytest.approx(-1.0 / 3.0, rel=1e-14)
        assert res.t == pytest.approx(2.0 / 3.0, rel=1e-14)
        assert res.R == pytest.approx(1.0 / 9.0, rel=1e-14)
        assert res.T == pytest.approx(8.0 / 9.0, rel=1e-14)

    def test_flux_conservation(self):
        res = step_coefficients(self.n(0.36), self.n(1.7))
        assert res.R + res.T == pytest.approx(1.0, rel=1e-14)

    def test_convention_duality(self):
        # de Broglie amplitudes from reciprocal indices: r flips sign,
        # t picks up n2/n1, fluxes match
        n1, n2 = 0.4, 0.9
        mx = step_coefficients(self.n(n1), self.n(n2), MAXWELL)
        db = step_coefficients(self.n(1.0 / n1), self.n(1.0 / n2), DEBROGLIE)
        assert db.r == pytest.approx(-mx.r, rel=1e-14)
        assert db.t == pytest.approx((n2 / n1) * mx.t, rel=1e-14)
        assert db.R == pytest.approx(mx.R, rel=1e-14)
        assert db.T == pytest.approx(mx.T, rel=1e-14)

    def test_evanescent_exit_total_reflection(self):
        res = step_coefficients(self.n(1.0), self.n(0.5j, evanescent=True))
        assert res.T == 0.0
        assert res.R == pytest.approx(1.0, rel=1e-14)

    def test_evanescent_incident_rejected(self):
        with pytest.raises(ValueError):
            step_coefficients(self.n(1j, evanescent=True), self.n(1.0))


class TestTransferMatrix:
    def test_bare_step_matches_fresnel(self, std_mode, E):
        stack = LayerStack(layers=(), exit_potential=-3.0 * E)
        res = transfer_matrix(stack, std_mode)
        n1 = generalized_index(std_mode, 0.0)
        n2 = generalized_index(std_mode, -3.0 * E)
        direct = step_coefficients(n1, n2)
        assert res.R == pytest.approx(direct.R, rel=1e-14)
        assert res.T == pytest.approx(direct.T, rel=1e-14)

    def test_step_one_ninth(self, std_mode, E):
        # n2/n1 = 2 needs U = -3E on the exit side
        res = transfer_matrix(LayerStack(exit_potential=-3.0 * E), std_mode)
        assert res.R == pytest.approx(1.0 / 9.0, rel=1e-14)

    def test_half_wave_window(self, std_mode, E):
        # a layer of optical thickness pi is transparent at any contrast
        U = -3.0 * E
        q = std_mode.k_v * math.sqrt(1.0 - U / E)
        stack = LayerStack(layers=(Layer(U, math.pi / q),))
        res = transfer_matrix(stack, std_mode)
        assert res.R == pytest.approx(0.0, abs=1e-12)
        assert res.T == pytest.approx(1.0, rel=1e-12)

    def test_tunneling_vs_oracle(self, std_mode, E):
        lam = 2.0 * math.pi / std_mode.k_v
        stack = LayerStack(layers=(Layer(1.5 * E, 0.3 * lam),))
        tm = transfer_matrix(stack, std_mode)
        oracle = numerov_oracle(stack, std_mode)
        assert tm.T == pytest.approx(oracle["T"], rel=1e-6)
        assert tm.R + tm.T == pytest.approx(1.0, rel=1e-10)

    def test_conventions_agree_on_flux(self, std_mode, E):
        lam = 2.0 * math.pi / std_mode.k_v
        stack = LayerStack(layers=(Layer(0.4 * E, 0.7 * lam),
                                   Layer(-0.8 * E, 1.3 * lam),
                                   Layer(0.9 * E, 0.2 * lam)))
        mx = transfer_matrix(stack, std_mode, MAXWELL)
        db = transfer_matrix(stack, std_mode, DEBROGLIE)
        assert db.R == pytest.approx(mx.R, rel=1e-12)
        assert db.T == pytest.approx(mx.T, rel=1e-12)

    def test_opaque_barrier_rejected(self, std_mode, E):
        stack = LayerStack(layers=(Layer(2.0 * E, 1.0),))
        with pytest.raises(OpacityError):
            transfer_matrix(stack, std_mode)

    def test_evanescent_exit_rejected(self, std_mode, E):
        with pytest.raises(ValueError):
            transfer_matrix(LayerStack(exit_potential=2.0 * E), std_mode)


class TestNumerovOracle:
    def test_free_propagation(self, std_mode):
        res = numerov_oracle(LayerStack(), std_mode)
        assert res["R"] == pytest.approx(0.0, abs=1e-10)
        assert res["T"] == pytest.approx(1.0, rel=1e-10)

    def test_step_exact(self, std_mode, E):
        res = numerov_oracle(LayerStack(exit_potential=-3.0 * E), std_mode)
        assert res["R"] == pytest.approx(1.0 / 9.0, rel=1e-8)
        assert res["T"] == pytest.approx(8.0 / 9.0, rel=1e-8)

    def test_unitarity(self, std_mode, E):
        lam = 2.0 * math.pi / std_mode.k_v
        stack = LayerStack(layers=(Layer(0.6 * E, 0.9 * lam),
                                   Layer(-0.3 * E, 0.4 * lam)))
        res = numerov_oracle(stack, std_mode)
        assert res["R"] + res["T"] == pytest.approx(1.0, rel=1e-8)

    def test_under_resolved_rejected(self, std_mode):
        with pytest.raises(GridResolutionError):
            numerov_oracle(LayerStack(), std_mode, points_per_wavelength=40)

    def test_evanescent_exit_rejected(self, std_mode, E):
        with pytest.raises(ValueError):
            numerov_oracle(LayerStack(exit_potential=1.5 * E), std_mode)


@st.composite
def random_stacks(draw, std_mode_lam):
    n_layers = draw(st.integers(min_value=1, max_value=8))
    layers = []
    for _ in range(n_layers):
        u_rel = draw(st.floats(min_value=0.0, max_value=0.9))
        d = draw(st.floats(min_value=0.05, max_value=2.0))
        layers.append((u_rel, d * std_mode_lam))
    return layers


class TestStackProperties:
    @settings(max_examples=25, deadline=None)
    @given(data=st.data())
    def test_unitarity_reciprocity_duality(self, data):
        from matterwave import ParticleSpecies, make_mode
        mode = make_mode(ParticleSpecies("testium", 1.0e-25),
                         2.0 * math.pi * 1000.0, velocity=0.01)
        E = HBAR * mode.omega_v
        lam = 2.0 * math.pi / mode.k_v
        spec = data.draw(random_stacks(lam))
        stack = LayerStack(layers=tuple(Layer(u * E, d) for u, d in spec))
        mx = transfer_matrix(stack, mode, MAXWELL)
        db = transfer_matrix(stack, mode, DEBROGLIE)
        rev = transfer_matrix(stack.reversed(), mode, MAXWELL)
        assert mx.R + mx.T == pytest.approx(1.0, rel=1e-10)
        assert db.R == pytest.approx(mx.R, rel=1e-12, abs=1e-14)
        assert db.T == pytest.approx(mx.T, rel=1e-12)
        # time-reversal symmetry: flux is direction independent
        assert rev.T == pytest.approx(mx.T, rel=1e-10)
