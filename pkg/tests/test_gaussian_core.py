import math

import numpy as np
import pytest

from src.core.errors import DomainError, PreconditionError
from src.core.gaussian_core import (
    EprParameter,
    TwoModeCovariance,
    apply_loss_to_signal,
    coherent_exponent,
    coherent_infidelity,
    coherent_infidelity_at_gap,
    epr_covariance,
    epr_infidelity,
    epr_infidelity_at_gap,
    fidelity_coherent,
    fidelity_epr_closed,
    fidelity_epr_printed,
    fidelity_pure_mixed_det,
    symplectic_eigenvalues,
)


def _entries(cm):
    return float(cm.a), float(cm.b), float(cm.c)


class TestCovariance:
    @pytest.mark.parametrize("mu, expected", [
        (1.0, (1.0, 1.0, 0.0)),
        (3.0, (3.0, 3.0, math.sqrt(8.0))),
    ])
    def test_epr_covariance(self, mu, expected):
        assert _entries(epr_covariance(mu)) == pytest.approx(expected, abs=1e-15)

    def test_epr_covariance_rejects_mu_below_one(self):
        with pytest.raises(DomainError):
            epr_covariance(0.5)

    def test_epr_covariance_is_pure_near_vacuum(self):
        nu_minus, nu_plus = symplectic_eigenvalues(epr_covariance(1.000001))
        assert nu_minus == pytest.approx(1.0, abs=1e-9)
        assert nu_plus == pytest.approx(1.0, abs=1e-9)

    def test_loss_identity_channel(self):
        cm = epr_covariance(3.0)
        assert _entries(apply_loss_to_signal(cm, 1.0)) == pytest.approx(_entries(cm), abs=1e-15)

    def test_full_loss_leaves_vacuum_signal(self):
        assert _entries(apply_loss_to_signal(epr_covariance(3.0), 0.0)) == pytest.approx(
            (1.0, 3.0, 0.0), abs=1e-15
        )

    def test_lossy_epr_entries(self):
        out = apply_loss_to_signal(epr_covariance(3.0), 0.25)
        assert _entries(out) == pytest.approx((1.5, 3.0, math.sqrt(2.0)), abs=1e-15)

    @pytest.mark.parametrize("r", [-0.1, 1.1, float("nan")])
    def test_loss_rejects_bad_reflectivity(self, r):
        with pytest.raises(DomainError):
            apply_loss_to_signal(epr_covariance(3.0), r)

    def test_as_matrix_layout(self):
        m = epr_covariance(3.0).as_matrix()
        c = math.sqrt(8.0)
        assert m.shape == (4, 4)
        np.testing.assert_allclose(m, m.T)
        assert m[0, 2] == pytest.approx(c)
        assert m[1, 3] == pytest.approx(-c)
        assert m[0, 1] == 0.0

    def test_physicality_flags(self):
        assert epr_covariance(5.0).is_physical()
        assert epr_covariance(5.0).is_pure()
        assert not apply_loss_to_signal(epr_covariance(5.0), 0.5).is_pure()
        assert not TwoModeCovariance(a=1.0, b=1.0, c=0.5).is_physical()


class TestInvariants:
    @pytest.mark.parametrize("mu", [*np.geomspace(1.0, 1e7, 60), 53366.99, 1e7])
    def test_epr_covariance_is_pure(self, mu):
        cm = epr_covariance(mu)
        nu_minus, nu_plus = symplectic_eigenvalues(cm)
        assert abs(nu_minus - 1.0) <= 1e-10
        assert abs(nu_plus - 1.0) <= 1e-10
        assert cm.is_pure()

    def test_determinant_fidelity_at_large_mu(self):
        v = epr_covariance(1e7)
        value = fidelity_pure_mixed_det(v, apply_loss_to_signal(v, 0.5))
        assert value == pytest.approx(fidelity_epr_closed((1e7 - 1.0) / 2.0, 0.5), rel=1e-9)

    def test_loss_preserves_physicality(self, rng):
        mu = np.concatenate([rng.uniform(1.0, 1e3, 400), [1.0, 1e3, 1.0, 1e3]])
        r = np.concatenate([rng.uniform(0.0, 1.0, 400), [0.0, 0.0, 1.0, 1.0]])
        for m, rr in zip(mu, r):
            lossy = apply_loss_to_signal(epr_covariance(m), rr)
            assert lossy.is_physical(), (m, rr)
            assert symplectic_eigenvalues(lossy)[0] >= 1.0 - 1e-9, (m, rr)

    def test_loss_keeps_exact_det_root(self):
        lossy = apply_loss_to_signal(epr_covariance(1e7), 0.25)
        assert float(lossy.det_root) == pytest.approx(0.25 + 0.75 * 1e7, rel=1e-15)
        assert lossy.is_physical()

    def test_inconsistent_det_root_rejected(self):
        with pytest.raises(DomainError):
            TwoModeCovariance(a=3.0, b=3.0, c=math.sqrt(8.0), det_root=2.0)


class TestSymplecticEigenvalues:
    def test_vacuum(self):
        assert symplectic_eigenvalues(TwoModeCovariance(1.0, 1.0, 0.0)) == pytest.approx((1.0, 1.0))

    def test_pure_state(self):
        assert symplectic_eigenvalues(epr_covariance(3.0)) == pytest.approx((1.0, 1.0), abs=1e-12)

    def test_lossy_state_product(self):
        nu_minus, nu_plus = symplectic_eigenvalues(apply_loss_to_signal(epr_covariance(3.0), 0.25))
        assert nu_minus <= nu_plus
        assert nu_minus * nu_plus == pytest.approx(2.5, rel=1e-14)
        assert nu_minus == pytest.approx(1.0, abs=1e-12)
        assert nu_plus == pytest.approx(2.5, rel=1e-14)


class TestEprParameter:
    def test_from_nbar(self):
        p = EprParameter.from_nbar(1.0)
        assert p.mu == 3.0

    def test_from_mu(self):
        assert EprParameter.from_mu(1.0).nbar == 0.0

    def test_inconsistent_pair_rejected(self):
        with pytest.raises(DomainError):
            EprParameter(mu=3.0, nbar=2.0)


class TestFidelities:
    def test_identical_states(self):
        v = epr_covariance(3.0)
        assert fidelity_pure_mixed_det(v, v) == pytest.approx(1.0, abs=1e-15)

    def test_determinant_value(self):
        v = epr_covariance(3.0)
        assert fidelity_pure_mixed_det(v, apply_loss_to_signal(v, 0.25)) == pytest.approx(4 / 9, rel=1e-14)

    @pytest.mark.parametrize("r", [0.0, 0.3, 0.99])
    def test_vacuum_is_loss_invariant(self, r):
        v = epr_covariance(1.0)
        assert fidelity_pure_mixed_det(v, apply_loss_to_signal(v, r)) == pytest.approx(1.0)

    def test_mixed_first_argument_rejected(self):
        mixed = apply_loss_to_signal(epr_covariance(3.0), 0.25)
        with pytest.raises(PreconditionError):
            fidelity_pure_mixed_det(mixed, epr_covariance(3.0))

    @pytest.mark.parametrize("nbar, r, expected", [
        (2.0, 1.0, 1.0),
        (1.0, 0.25, 4 / 9),
        (0.0, 0.4, 1.0),
    ])
    def test_epr_closed(self, nbar, r, expected):
        assert fidelity_epr_closed(nbar, r) == pytest.approx(expected, rel=1e-15)

    def test_closed_form_matches_determinant_on_grid(self):
        for mu in np.geomspace(1.0, 1e3, 100):
            v = epr_covariance(mu)
            nbar = (mu - 1.0) / 2.0
            for r in np.linspace(0.0, 1.0, 100):
                det_value = fidelity_pure_mixed_det(v, apply_loss_to_signal(v, r))
                closed = fidelity_epr_closed(nbar, r)
                assert abs(closed - det_value) <= 1e-12 * det_value, (mu, r)

    def test_printed_form_disagrees_at_identity_channel(self):
        assert fidelity_epr_printed(1.0, 1.0) == pytest.approx(1 / 9)
        assert fidelity_epr_closed(1.0, 1.0) == 1.0

    def test_coherent(self):
        assert fidelity_coherent(1.0, 0.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
        assert fidelity_coherent(7.0, 1.0) == 1.0
        assert coherent_exponent(1.0, 0.25) == pytest.approx(-0.25)

    def test_coherent_infidelity_keeps_tiny_values(self):
        gap = 1e-12
        expected = (gap / (1.0 + math.sqrt(1.0 - gap))) ** 2
        assert coherent_infidelity_at_gap(1.0, gap) == pytest.approx(expected, rel=1e-10)
        assert coherent_infidelity(1.0, 1.0 - 1e-6) == pytest.approx(2.5e-13, rel=1e-5)

    def test_epr_infidelity_matches_fidelity(self):
        nbar = np.array([0.5, 1.0, 10.0])
        r = np.array([0.1, 0.25, 0.9])
        np.testing.assert_allclose(epr_infidelity(nbar, r), 1.0 - fidelity_epr_closed(nbar, r), rtol=1e-12)

    def test_gap_and_reflectivity_forms_agree(self):
        assert epr_infidelity_at_gap(3.0, 0.75) == pytest.approx(epr_infidelity(3.0, 0.25), rel=1e-15)

    def test_vectorized_shape(self):
        out = fidelity_epr_closed(np.ones((3, 4)), np.full((3, 4), 0.25))
        assert out.shape == (3, 4)
        np.testing.assert_allclose(out, 4 / 9)

    @pytest.mark.parametrize("nbar, r", [(-1.0, 0.5), (1.0, 1.5), (float("inf"), 0.5)])
    def test_domain_checks(self, nbar, r):
        with pytest.raises(DomainError):
            fidelity_epr_closed(nbar, r)
