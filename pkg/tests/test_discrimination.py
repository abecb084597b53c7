import math

import numpy as np
import pytest

from src.core.discrimination import (
    BoundKind,
    DiscriminationResult,
    binary_entropy,
    discriminate_pure,
    discriminate_qcb,
    helstrom_from_infidelity,
    helstrom_pure,
    qcb_from_fidelity,
    readout_information,
    readout_information_from_bias,
    trace_distance_pure,
)
from src.core.errors import DomainError

ASYMPTOTE_K1 = (math.log(2048 / 81) - 7 * math.log(9 / 7)) / math.log(512)


class TestHelstrom:
    @pytest.mark.parametrize("fidelity, expected", [
        (1.0, 0.5),
        (0.0, 0.0),
        (4 / 9, (1 - math.sqrt(5) / 3) / 2),
    ])
    def test_values(self, fidelity, expected):
        assert helstrom_pure(fidelity) == pytest.approx(expected, abs=1e-15)

    def test_quoted_value(self):
        assert helstrom_pure(4 / 9) == pytest.approx(0.127322, abs=1e-6)

    def test_monotone_in_fidelity(self):
        f = np.linspace(0.0, 1.0, 1001)
        assert np.all(np.diff(helstrom_pure(f)) > 0.0)

    def test_infidelity_companion(self):
        assert helstrom_from_infidelity(5 / 9) == pytest.approx(helstrom_pure(4 / 9), rel=1e-15)

    @pytest.mark.parametrize("fidelity", [-0.01, 1.01, float("nan")])
    def test_domain(self, fidelity):
        with pytest.raises(DomainError):
            helstrom_pure(fidelity)

    @pytest.mark.parametrize("fidelity, expected", [(1.0, 0.0), (0.0, 1.0), (0.75, 0.5)])
    def test_trace_distance(self, fidelity, expected):
        assert trace_distance_pure(fidelity) == pytest.approx(expected)


class TestChernoff:
    @pytest.mark.parametrize("fidelity, expected", [(1.0, 0.5), (0.0, 0.0), (4 / 9, 2 / 9)])
    def test_values(self, fidelity, expected):
        assert qcb_from_fidelity(fidelity) == pytest.approx(expected)

    def test_helstrom_never_exceeds_qcb(self, rng):
        f = rng.uniform(0.0, 1.0, 10_000)
        assert np.all(helstrom_pure(f) <= qcb_from_fidelity(f) + 1e-15)


class TestEntropy:
    @pytest.mark.parametrize("p, expected", [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)])
    def test_endpoints(self, p, expected):
        assert binary_entropy(p) == pytest.approx(expected, abs=1e-15)

    def test_quoted_value(self):
        assert binary_entropy(2 / 9) == pytest.approx(0.764205, abs=1e-6)

    def test_symmetry(self, rng):
        p = rng.uniform(0.0, 1.0, 1000)
        np.testing.assert_allclose(binary_entropy(p), binary_entropy(1.0 - p), atol=1e-12)

    def test_small_p_branch(self):
        p = 1e-15
        expected = p * math.log2(1 / p) + p / math.log(2)
        assert binary_entropy(p) == pytest.approx(expected, rel=1e-12)
        assert binary_entropy(1.0 - 1e-13) > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            binary_entropy(1.5)


class TestReadoutInformation:
    @pytest.mark.parametrize("p_bar, expected", [(0.5, 0.0), (0.0, 1.0)])
    def test_endpoints(self, p_bar, expected):
        assert readout_information(p_bar) == pytest.approx(expected, abs=1e-15)

    def test_quoted_value(self):
        assert readout_information(2 / 9) == pytest.approx(0.235795, abs=1e-6)
        assert readout_information(2 / 9) == pytest.approx(ASYMPTOTE_K1, abs=1e-12)

    def test_rejects_worse_than_guessing(self):
        with pytest.raises(DomainError):
            readout_information(0.6)

    def test_strictly_decreasing(self):
        p = np.linspace(1e-6, 0.5 - 1e-6, 1000)
        assert np.all(np.diff(readout_information(p)) < 0.0)

    def test_bias_series_is_continuous(self):
        below = readout_information_from_bias(1e-4 * (1 - 1e-12))
        above = readout_information_from_bias(1e-4)
        assert below == pytest.approx(above, rel=1e-9)

    def test_accurate_near_one_half(self):
        beta = 1e-8
        assert readout_information_from_bias(beta) == pytest.approx(beta**2 / (2 * math.log(2)), rel=1e-12)

    def test_bias_one_reads_full_bit(self):
        assert readout_information_from_bias(1.0) == 1.0

    def test_array_shape_preserved(self):
        out = readout_information(np.full((2, 3), 0.25))
        assert out.shape == (2, 3)


class TestResults:
    def test_pure_result(self):
        result = discriminate_pure(4 / 9)
        assert result.kind is BoundKind.EXACT_HELSTROM
        assert result.p_bar == pytest.approx(0.127322, abs=1e-6)
        assert result.info_bits == pytest.approx(readout_information(result.p_bar), abs=1e-12)

    def test_qcb_result(self):
        result = discriminate_qcb(4 / 9)
        assert result.kind is BoundKind.QCB_UPPER
        assert result.p_bar == pytest.approx(2 / 9)
        assert result.info_bits == pytest.approx(0.235795, abs=1e-6)

    def test_info_derived_when_missing(self):
        assert DiscriminationResult(p_bar=0.5, kind=BoundKind.QCB_UPPER).info_bits == 0.0

    def test_rejects_p_bar_above_half(self):
        with pytest.raises(DomainError):
            DiscriminationResult(p_bar=0.51, kind=BoundKind.EXACT_HELSTROM)

    def test_kind_values(self):
        assert BoundKind("exact-helstrom") is BoundKind.EXACT_HELSTROM
        assert BoundKind.QCB_UPPER.value == "qcb-upper"
