"""Synthetic signal generators."""

import numpy as np
import pytest

import cecp
from cecp.errors import InvalidInputError
from cecp.prng import SplitMix64
from cecp.synth import DEFAULT_TRANSIENT, GENERATOR_KINDS


class TestGeneratorSpec:
    def test_known_kinds(self):
        assert set(GENERATOR_KINDS) == {"white_noise", "random_walk", "logistic_map"}
        with pytest.raises(InvalidInputError):
            cecp.GeneratorSpec(kind="pink_noise", length=10)

    def test_length_must_be_positive_integer(self):
        with pytest.raises(InvalidInputError):
            cecp.GeneratorSpec(kind="white_noise", length=0)
        with pytest.raises(InvalidInputError):
            cecp.GeneratorSpec(kind="white_noise", length=2.5)

    def test_logistic_parameter_domains(self):
        cecp.GeneratorSpec(kind="logistic_map", length=5, r=4.0, x0=0.3)
        for bad_r in (0.0, -1.0, 4.0001):
            with pytest.raises(InvalidInputError):
                cecp.GeneratorSpec(kind="logistic_map", length=5, r=bad_r)
        for bad_x0 in (0.0, 1.0, -0.2, 1.5):
            with pytest.raises(InvalidInputError):
                cecp.GeneratorSpec(kind="logistic_map", length=5, x0=bad_x0)
        with pytest.raises(InvalidInputError):
            cecp.GeneratorSpec(kind="logistic_map", length=5, transient=-1)

    def test_default_transient(self):
        assert cecp.GeneratorSpec(kind="logistic_map", length=5).transient == DEFAULT_TRANSIENT

    def test_label_defaults_to_kind_and_seed(self):
        spec = cecp.GeneratorSpec(kind="white_noise", length=5, seed=7)
        assert spec.effective_label == "white_noise-7"
        named = cecp.GeneratorSpec(kind="white_noise", length=5, seed=7, label="mine")
        assert named.effective_label == "mine"


class TestDeterminism:
    @pytest.mark.parametrize("kind", GENERATOR_KINDS)
    def test_same_spec_same_bits(self, kind):
        spec = cecp.GeneratorSpec(kind=kind, length=200, seed=99)
        first = cecp.generate(spec)
        second = cecp.generate(spec)
        assert np.array_equal(first.values, second.values)
        assert first.label == second.label == f"{kind}-99"

    @pytest.mark.parametrize("kind", GENERATOR_KINDS)
    def test_different_seeds_differ(self, kind):
        a = cecp.generate(cecp.GeneratorSpec(kind=kind, length=200, seed=1))
        b = cecp.generate(cecp.GeneratorSpec(kind=kind, length=200, seed=2))
        assert not np.array_equal(a.values, b.values)


class TestWhiteNoise:
    def test_values_are_unit_interval_uniforms(self):
        series = cecp.generate(cecp.GeneratorSpec(kind="white_noise", length=10_000, seed=3))
        assert np.all(series.values >= 0.0)
        assert np.all(series.values < 1.0)
        assert abs(series.values.mean() - 0.5) < 0.01

    def test_matches_prng_stream(self):
        series = cecp.generate(cecp.GeneratorSpec(kind="white_noise", length=50, seed=21))
        rng = SplitMix64(21)
        assert series.values.tolist() == [rng.random() for _ in range(50)]

    def test_high_entropy_low_complexity(self):
        series = cecp.generate(cecp.GeneratorSpec(kind="white_noise", length=10_000, seed=0))
        q = cecp.Quantifiers.from_distribution(cecp.pattern_distribution(series, 4))
        assert q.entropy > 0.98
        assert q.complexity < 0.03


class TestRandomWalk:
    def test_increments_are_the_normal_stream(self):
        series = cecp.generate(cecp.GeneratorSpec(kind="random_walk", length=100, seed=17))
        rng = SplitMix64(17)
        increments = [rng.normal() for _ in range(100)]
        assert series.values[0] == increments[0]
        assert np.allclose(np.diff(series.values), increments[1:], atol=1e-12)

    def test_walk_wanders(self):
        series = cecp.generate(cecp.GeneratorSpec(kind="random_walk", length=5000, seed=4))
        assert series.values.std() > 1.0


class TestLogisticMap:
    def test_hand_iteration_without_transient(self):
        spec = cecp.GeneratorSpec(kind="logistic_map", length=3, x0=0.3, r=4.0, transient=0)
        values = cecp.generate(spec).values
        assert np.allclose(values, [0.3, 0.84, 0.5376], atol=1e-12)

    def test_recurrence_matches_direct_loop(self):
        spec = cecp.GeneratorSpec(
            kind="logistic_map", length=50, x0=0.123, r=3.7, transient=25
        )
        values = cecp.generate(spec).values
        x = 0.123
        for _ in range(25):
            x = 3.7 * x * (1.0 - x)
        expected = []
        for _ in range(50):
            expected.append(x)
            x = 3.7 * x * (1.0 - x)
        assert values.tolist() == expected

    @pytest.mark.parametrize("r,x0", [(4.0, 0.1), (4.0, 0.5), (3.2, 0.9), (0.5, 0.99)])
    def test_orbit_stays_inside_unit_interval(self, r, x0):
        spec = cecp.GeneratorSpec(kind="logistic_map", length=2000, r=r, x0=x0)
        values = cecp.generate(spec).values
        assert np.all(values > 0.0)
        assert np.all(values < 1.0)

    def test_seed_derived_start_point_is_deterministic(self):
        spec = cecp.GeneratorSpec(kind="logistic_map", length=20, seed=12, transient=0)
        a = cecp.generate(spec).values
        b = cecp.generate(spec).values
        assert np.array_equal(a, b)
        assert 0.0 < a[0] < 1.0


class TestRegimeSeparation:
    def test_chaos_sits_deeper_in_the_plane_than_noise(self):
        noise = cecp.generate(cecp.GeneratorSpec(kind="white_noise", length=10_000, seed=1))
        chaos = cecp.generate(cecp.GeneratorSpec(kind="logistic_map", length=10_000, seed=1))
        qn = cecp.Quantifiers.from_distribution(cecp.pattern_distribution(noise, 4))
        qc = cecp.Quantifiers.from_distribution(cecp.pattern_distribution(chaos, 4))
        assert qc.entropy < qn.entropy
        assert qc.complexity > qn.complexity
