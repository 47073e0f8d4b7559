import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bell_phi_plus
from fcad.channels import (
    EtaOutOfRangeError,
    QuantumChannel,
    _corner_collapse_channel,
    ad_channel,
    apply,
    check_composition,
    choi_matrix,
    complementary_output,
    compose,
    degrading_map,
    fc_channel,
    identity_channel,
    memory_channel,
    tensor,
)
from fcad.qmat import (
    DimensionMismatchError,
    basis_state,
    hermitian_eigenvalues,
    kron,
    max_abs_diff,
    outer,
    partial_trace,
    random_density,
    random_pure,
)


class TestAdChannel:
    def test_kraus_forms(self):
        eta = 0.36
        e0, e1 = ad_channel(eta).kraus
        np.testing.assert_allclose(e0, np.diag([1.0, 0.6]))
        np.testing.assert_allclose(e1, [[0.0, 0.8], [0.0, 0.0]])

    def test_noiseless_limit(self):
        rho = random_density(2, 0)
        np.testing.assert_allclose(apply(ad_channel(1.0), rho), rho, atol=1e-15)

    def test_full_decay(self):
        out = apply(ad_channel(0.0), outer(basis_state(2, 1)))
        np.testing.assert_allclose(out, np.diag([1.0, 0.0]), atol=1e-15)

    def test_partial_decay(self):
        out = apply(ad_channel(0.36), outer(basis_state(2, 1)))
        np.testing.assert_allclose(out, np.diag([0.64, 0.36]), atol=1e-15)

    def test_rejects_bad_eta(self):
        with pytest.raises(EtaOutOfRangeError):
            ad_channel(1.5)


class TestFcChannel:
    def test_ground_state_fixed(self):
        rho = outer(basis_state(4, 0))
        np.testing.assert_allclose(apply(fc_channel(0.4), rho), rho, atol=1e-15)

    def test_double_excitation_decays(self):
        eta = 0.3
        out = apply(fc_channel(eta), outer(basis_state(4, 3)))
        np.testing.assert_allclose(out, np.diag([1.0 - eta, 0.0, 0.0, eta]), atol=1e-15)

    def test_general_pure_output_entries(self):
        """Channel output of a general pure state matches the entrywise form:
        sqrt(eta) on the |11> coherences, eta on its population, and the
        leaked (1-eta)|d|^2 added to the |00> population."""
        rng = np.random.default_rng(8)
        psi = random_pure(4, rng)
        eta = 0.62
        a, b, c, d = psi
        out = apply(fc_channel(eta), outer(psi))
        expected = np.array(
            [
                [abs(a) ** 2 + (1 - eta) * abs(d) ** 2, a * b.conj(), a * c.conj(), math.sqrt(eta) * a * d.conj()],
                [b * a.conj(), abs(b) ** 2, b * c.conj(), math.sqrt(eta) * b * d.conj()],
                [c * a.conj(), c * b.conj(), abs(c) ** 2, math.sqrt(eta) * c * d.conj()],
                [math.sqrt(eta) * d * a.conj(), math.sqrt(eta) * d * b.conj(), math.sqrt(eta) * d * c.conj(), eta * abs(d) ** 2],
            ]
        )
        assert max_abs_diff(out, expected) < 1e-14

    def test_diagonal_action(self):
        eta = 0.7
        diag = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
        out = apply(fc_channel(eta), diag)
        np.testing.assert_allclose(
            out, np.diag([0.4 + 0.3 * 0.1, 0.3, 0.2, 0.7 * 0.1]), atol=1e-15
        )

    def test_output_has_two_zero_eigenvalues(self):
        for i in range(25):
            rng = np.random.default_rng(np.random.SeedSequence([21, i]))
            psi = random_pure(4, rng)
            eigs = hermitian_eigenvalues(apply(fc_channel(float(rng.uniform())), outer(psi)))
            assert eigs[2] < 1e-10 and eigs[3] < 1e-10


class TestMemoryChannel:
    def test_full_memory_endpoint(self):
        eta = 0.4
        for i in range(20):
            rho = random_density(4, np.random.SeedSequence([31, i]))
            assert max_abs_diff(
                apply(memory_channel(eta, 1.0), rho), apply(fc_channel(eta), rho)
            ) < 1e-12

    def test_memoryless_endpoint(self):
        eta = 0.4
        pair = tensor(ad_channel(eta), ad_channel(eta))
        for i in range(20):
            rho = random_density(4, np.random.SeedSequence([32, i]))
            assert max_abs_diff(apply(memory_channel(eta, 0.0), rho), apply(pair, rho)) < 1e-12

    def test_convex_mixture(self):
        eta, mu = 0.5, 0.5
        rho = outer(basis_state(4, 3))
        blend = (1.0 - mu) * apply(tensor(ad_channel(eta), ad_channel(eta)), rho) + mu * apply(
            fc_channel(eta), rho
        )
        assert max_abs_diff(apply(memory_channel(eta, mu), rho), blend) < 1e-14

    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.0, max_value=1.0),
        st.integers(min_value=0, max_value=10**6),
    )
    @settings(max_examples=25, deadline=None)
    def test_trace_preserving(self, eta, mu, seed):
        rho = random_density(4, seed)
        assert abs(np.trace(apply(memory_channel(eta, mu), rho)).real - 1.0) < 1e-12


class TestApplyAndCompose:
    def test_identity_channel(self):
        rho = random_density(4, 1)
        np.testing.assert_allclose(apply(identity_channel(4), rho), rho)

    def test_apply_dimension_check(self):
        with pytest.raises(DimensionMismatchError):
            apply(fc_channel(0.5), np.eye(2) / 2)

    def test_composition_semigroup(self):
        assert check_composition(100, seed=0) < 1e-12

    def test_compose_with_identity(self):
        ch = fc_channel(0.3)
        rho = random_density(4, 2)
        assert max_abs_diff(
            apply(compose(identity_channel(4), ch), rho), apply(ch, rho)
        ) < 1e-15

    def test_compose_zero_transmissivity(self):
        rho = random_density(4, 3)
        assert max_abs_diff(
            apply(compose(fc_channel(0.0), fc_channel(1.0)), rho), apply(fc_channel(0.0), rho)
        ) < 1e-15

    def test_compose_dimension_check(self):
        with pytest.raises(DimensionMismatchError):
            compose(ad_channel(0.5), fc_channel(0.5))

    def test_trace_preservation_all_channels(self):
        channels = [ad_channel(0.3), fc_channel(0.3), memory_channel(0.3, 0.6), degrading_map(0.7)]
        for ch in channels:
            for i in range(25):
                rho = random_density(ch.dim_in, np.random.SeedSequence([77, i]))
                assert abs(np.trace(apply(ch, rho)).real - 1.0) < 1e-12

    def test_choi_positive(self):
        for ch in (ad_channel(0.3), fc_channel(0.8), memory_channel(0.5, 0.4), degrading_map(0.6)):
            eigs = np.linalg.eigvalsh(choi_matrix(ch))
            assert eigs.min() >= -1e-10

    def test_completeness_validation(self):
        with pytest.raises(ValueError):
            QuantumChannel((np.eye(2) * 0.5,), 2, 2)


class TestComplementaryOutput:
    def test_ground_state(self):
        rho = outer(basis_state(4, 0))
        np.testing.assert_allclose(complementary_output(0.3, rho), rho, atol=1e-15)

    def test_double_excitation(self):
        eta = 0.3
        out = complementary_output(eta, outer(basis_state(4, 3)))
        np.testing.assert_allclose(out, np.diag([eta, 0.0, 0.0, 1.0 - eta]), atol=1e-15)

    def test_matches_dilation(self):
        """Environment state equals the system-traced dilated evolution."""
        for i in range(50):
            rng = np.random.default_rng(np.random.SeedSequence([55, i]))
            eta = float(rng.uniform())
            rho = random_density(4, rng)
            ks = fc_channel(eta).kraus
            isometry = np.zeros((16, 4), dtype=complex)
            for env_index, k in zip((0, 3), ks):
                isometry += kron(k, basis_state(4, env_index).reshape(4, 1))
            dilated = isometry @ rho @ isometry.conj().T
            assert max_abs_diff(
                partial_trace(dilated, [4, 4], [1]), complementary_output(eta, rho)
            ) < 1e-12

    def test_dimension_check(self):
        with pytest.raises(DimensionMismatchError):
            complementary_output(0.5, np.eye(2) / 2)


class TestDegradingMap:
    def test_corner_collapse_matches_elementwise_table(self):
        """The ancilla construction reduces to the entrywise map keeping the
        |00>/|11> corner and folding the middle populations into |00>."""
        collapse = _corner_collapse_channel()
        for i in range(25):
            rho = random_density(4, np.random.SeedSequence([91, i]))
            out = apply(collapse, rho)
            expected = np.zeros((4, 4), dtype=complex)
            expected[0, 0] = rho[0, 0] + rho[1, 1] + rho[2, 2]
            expected[3, 3] = rho[3, 3]
            expected[0, 3] = rho[0, 3]
            expected[3, 0] = rho[3, 0]
            assert max_abs_diff(out, expected) < 1e-14

    @pytest.mark.parametrize("eta", [0.5, 0.7, 1.0])
    def test_degrades_to_environment(self, eta):
        ch = fc_channel(eta)
        dmap = degrading_map(eta)
        for i in range(100):
            rho = random_density(4, np.random.SeedSequence([61, i]))
            assert max_abs_diff(
                apply(dmap, apply(ch, rho)), complementary_output(eta, rho)
            ) < 1e-12

    def test_rejects_low_eta(self):
        with pytest.raises(EtaOutOfRangeError):
            degrading_map(0.49)

    def test_bell_state_eigenvalues(self):
        out = apply(fc_channel(0.5), outer(bell_phi_plus()))
        eigs = hermitian_eigenvalues(out)
        np.testing.assert_allclose(eigs[:2], [0.9330127018922193, 0.0669872981077807], atol=1e-12)
