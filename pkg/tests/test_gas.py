import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sphereflame.errors import DomainError
from sphereflame.gas import (
    GasModel,
    GasState,
    entropy,
    hydrogen_air_mixture,
    internal_energy,
    sound_speed,
    temperature,
)


def model_with(gamma_u=1.4, gamma_b=1.4, Q=1.0, W_mix=0.029, W0=GasState(1.0, 0.0, 1.0)):
    return GasModel(gamma_u=gamma_u, gamma_b=gamma_b, Q=Q, W_mix=W_mix, W0=W0)


# --- oracle: exact rational arithmetic on the mixture constants -------------
W_T = 2 * Fraction(2, 1000) + Fraction(32, 1000) + 4 * Fraction(28, 1000)
Y_H2 = 2 * Fraction(2, 1000) / W_T
Y_O2 = Fraction(32, 1000) / W_T
Q_ORACLE = float((Y_H2 + Y_O2) * Fraction(13255000))
W_MIX_ORACLE = W_T / 7
RHO0_ORACLE = float(Fraction(10**5) * W_MIX_ORACLE / (Fraction(8314, 1000) * 283))


def test_oracle_values_match_quoted_figures():
    assert float(Y_H2) == pytest.approx(0.027027, abs=1e-6)
    assert Q_ORACLE == pytest.approx(3.2244e6, rel=1e-4)
    assert RHO0_ORACLE == pytest.approx(0.8986, rel=1e-4)


class TestSoundSpeed:
    def test_unit(self):
        assert sound_speed(GasState(1.4, 0.0, 1.0), model_with()) == pytest.approx(1.0, rel=1e-15)

    def test_ambient_mixture(self):
        c = sound_speed(GasState(0.8986, 0.0, 1e5), model_with())
        assert c == pytest.approx(math.sqrt(1.4e5 / 0.8986), rel=1e-14)
        assert c == pytest.approx(394.7, abs=0.05)

    def test_zero_pressure_rejected(self):
        with pytest.raises(DomainError):
            sound_speed(GasState(1.0, 0.0, 0.0), model_with())

    def test_burnt_flag_selects_gamma(self):
        m = model_with(gamma_u=1.4, gamma_b=2.0)
        assert sound_speed(GasState(1.0, 0.0, 1.0, burnt=True), m) == pytest.approx(math.sqrt(2.0))
        assert sound_speed(GasState(1.0, 0.0, 1.0), m) == pytest.approx(math.sqrt(1.4))

    @given(
        rho=st.floats(1e-6, 1e6),
        p=st.floats(1e-3, 1e9),
        gamma=st.floats(1.01, 3.0),
    )
    def test_inverts_to_pressure(self, rho, p, gamma):
        m = model_with(gamma_u=gamma)
        c = sound_speed(GasState(rho, 0.0, p), m)
        assert c * c * rho / gamma == pytest.approx(p, rel=1e-14)


class TestEntropy:
    def test_unit_density(self):
        assert entropy(GasState(1.0, 0.0, 5.0), model_with()) == 5.0

    def test_exact_cancellation(self):
        assert entropy(GasState(2.0, 0.0, 2.0**1.4), model_with()) == pytest.approx(1.0, rel=1e-15)

    def test_shocked_state(self):
        # 4.5 / 3.7333**1.4 recomputed by hand: 4.5 / 6.32309
        assert entropy(GasState(3.7333, 0.0, 4.5), model_with()) == pytest.approx(0.71168, abs=1e-5)

    def test_rejects_nonpositive_density(self):
        with pytest.raises(DomainError):
            entropy(GasState(0.0, 0.0, 1.0), model_with())

    @given(
        rho=st.floats(1e-3, 1e3),
        p=st.floats(1e-3, 1e6),
        lam=st.floats(1e-2, 1e2),
    )
    def test_scale_invariance(self, rho, p, lam):
        m = model_with()
        s = entropy(GasState(rho, 0.0, p), m)
        scaled = entropy(GasState(lam * rho, 0.0, lam**1.4 * p), m)
        assert scaled == pytest.approx(s, rel=1e-12)


class TestTemperature:
    def test_ambient_round_trip(self, h2air):
        assert temperature(h2air.W0, h2air) == pytest.approx(283.0, rel=1e-12)

    def test_from_quoted_density(self, h2air):
        assert temperature(GasState(0.8986, 0.0, 1e5), h2air) == pytest.approx(283.0, abs=0.1)

    def test_linear_in_pressure(self, h2air):
        assert temperature(GasState(1.0, 0.0, 0.0), h2air) == 0.0

    def test_burnt_state_uses_product_molar_mass(self, h2air):
        fresh = temperature(GasState(1.0, 0.0, 1e5), h2air)
        burnt = temperature(GasState(1.0, 0.0, 1e5, burnt=True), h2air)
        assert burnt / fresh == pytest.approx(7.0 / 6.0, rel=1e-14)

    @pytest.mark.parametrize("T0", [200.0, 283.0, 500.0])
    def test_round_trip_any_ambient(self, T0):
        m = hydrogen_air_mixture(2e5, T0)
        assert temperature(m.W0, m) == pytest.approx(T0, rel=1e-12)


class TestInternalEnergy:
    @pytest.mark.parametrize(
        "rho,p,gamma,expected",
        [(1.0, 0.4, 1.4, 1.0), (2.0, 4.0, 1.4, 5.0), (1.0, 1.0, 2.0, 1.0)],
    )
    def test_examples(self, rho, p, gamma, expected):
        m = model_with(gamma_u=gamma, gamma_b=gamma)
        assert internal_energy(GasState(rho, 0.0, p), m) == pytest.approx(expected, rel=1e-14)

    def test_rejects_nonpositive_density(self):
        with pytest.raises(DomainError):
            internal_energy(GasState(-1.0, 0.0, 1.0), model_with())


class TestHydrogenAir:
    def test_mass_fractions(self, h2air):
        y = h2air.mass_fractions
        assert y["H2"] == pytest.approx(float(Y_H2), rel=1e-15)
        assert y["O2"] == pytest.approx(float(Y_O2), rel=1e-15)
        assert abs(sum(y.values()) - 1.0) <= 1e-15

    def test_heat_of_reaction(self, h2air):
        assert h2air.Q == pytest.approx(Q_ORACLE, rel=1e-14)

    def test_ambient_state(self, h2air):
        assert h2air.W0.rho == pytest.approx(RHO0_ORACLE, rel=1e-14)
        assert h2air.W0.p == 1e5
        assert h2air.W0.u == 0.0 and not h2air.W0.burnt
        assert h2air.gamma_u == h2air.gamma_b == 1.4
        assert h2air.W_mix == pytest.approx(0.148 / 7, rel=1e-15)

    @pytest.mark.parametrize("p0,T0", [(0.0, 283.0), (1e5, -1.0)])
    def test_rejects_bad_ambient(self, p0, T0):
        with pytest.raises(DomainError):
            hydrogen_air_mixture(p0, T0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"gamma_u": 1.0},
        {"gamma_b": 0.9},
        {"Q": 0.0},
        {"W_mix": -1.0},
        {"W0": GasState(1.0, 1.0, 1.0)},
        {"W0": GasState(1.0, 0.0, 1.0, burnt=True)},
    ],
)
def test_model_invariants_enforced(kwargs):
    with pytest.raises(DomainError):
        model_with(**kwargs)
