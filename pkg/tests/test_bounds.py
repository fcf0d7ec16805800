"""Invariant extraction, configuration enumeration, and the explicit bound."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import folcalc as f
from folcalc import (
    CANONICAL,
    WEAK_NEF,
    HilbertSamples,
    ModelInvariants,
    SingularityConfiguration,
    bound_singularity_count,
    compute_n1,
    enumerate_configurations,
    enumerate_reciprocal_tuples,
    extract_invariants,
    index_bounds,
    pipeline,
    relate_models,
)
from folcalc.errors import (
    InconsistentModelError,
    InconsistentSamplesError,
    NotGeneralTypeError,
    ValidationError,
)

from conftest import brute_reciprocal_tuples, make_synthetic_model, model_samples


def invariants(k2, k_dot_ky, chi_o, s, cusps=None):
    return ModelInvariants(Fraction(k2), Fraction(k_dot_ky), chi_o, Fraction(s), cusps)


class TestExtractInvariants:
    def test_polynomial_model_any_period(self):
        # no singular points: chi is honestly quadratic and S = 0
        values = {m: Fraction(m * m - m + 2) for m in range(0, 12)}
        inv = extract_invariants(HilbertSamples(values), WEAK_NEF)
        assert inv.k2 == 2 and inv.k_dot_ky == 2 and inv.chi_o == 2
        assert inv.contribution_sum == 0

    def test_half_point_model_with_rational_samples(self):
        # K^2 = 2, K.K_Y = 1, chi(O) = 1 with one order-2 point; the table is
        # rational-valued but extraction still recovers everything exactly
        data = [f.Terminal(f.CyclicType(2, 1))]
        values = {m: f.global_chi(2, 1, 1, data, m) for m in range(0, 7)}
        inv = extract_invariants(HilbertSamples(values, period_hint=2), WEAK_NEF)
        assert (inv.k2, inv.k_dot_ky, inv.chi_o) == (2, 1, 1)
        assert inv.contribution_sum == Fraction(1, 4)

    def test_canonical_mode_recovers_cusp_count(self):
        data = [f.Cusp()]
        values = {m: f.global_chi(2, 0, 1, data, m) for m in range(0, 7)}
        inv = extract_invariants(HilbertSamples(values, period_hint=2), CANONICAL)
        assert inv.cusp_count == 1
        assert inv.chi_o == 1

    def test_sparse_samples_suffice(self):
        data = [f.Terminal(f.CyclicType(3, 1))]
        k2, k_dot_ky, chi_o = Fraction(4, 3), Fraction(2, 3), 0
        values = {
            m: f.global_chi(k2, k_dot_ky, chi_o, data, m, require_integer=True)
            for m in (0, 1, 3, 6, 9)
        }
        inv = extract_invariants(HilbertSamples(values), WEAK_NEF)
        assert (inv.k2, inv.k_dot_ky, inv.chi_o) == (k2, k_dot_ky, 0)

    def test_odd_hint_doubled_in_canonical_mode(self):
        data = [f.Terminal(f.CyclicType(3, 1)), f.Cusp()]
        k2, k_dot_ky = Fraction(4, 3), Fraction(2, 3)
        values = {
            m: f.global_chi(k2, k_dot_ky, 1, data, m, require_integer=True)
            for m in range(0, 19)
        }
        inv = extract_invariants(HilbertSamples(values, period_hint=3), CANONICAL)
        assert inv.cusp_count == 1 and inv.k2 == k2

    def test_incompatible_samples_rejected(self):
        values = {m: Fraction(m * m + 2) for m in range(0, 8)}
        values[5] += 1
        with pytest.raises(InconsistentSamplesError):
            extract_invariants(HilbertSamples(values), WEAK_NEF, period_bound=4)

    def test_not_general_type_rejected(self):
        values = {m: Fraction(-m * m + m + 1) for m in range(0, 8)}
        with pytest.raises(NotGeneralTypeError):
            extract_invariants(HilbertSamples(values), WEAK_NEF)

    def test_missing_required_samples_with_hint(self):
        values = {0: 1, 1: 2, 2: 5}
        with pytest.raises(ValidationError, match="missing"):
            extract_invariants(HilbertSamples(values, period_hint=2), WEAK_NEF)


class TestBoundSingularityCount:
    @pytest.mark.parametrize("s, expected", [(0, 0), (Fraction(1, 4), 1), (Fraction(3, 2), 6)])
    def test_values(self, s, expected):
        assert bound_singularity_count(s) == expected

    def test_negative_sum_rejected(self):
        with pytest.raises(InconsistentModelError):
            bound_singularity_count(Fraction(-1, 4))


class TestReciprocalTuples:
    def test_three_terms_summing_to_one(self):
        assert enumerate_reciprocal_tuples(3, 1) == [(2, 3, 6), (2, 4, 4), (3, 3, 3)]

    def test_pair_summing_to_one(self):
        assert enumerate_reciprocal_tuples(2, 1) == [(2, 2)]

    def test_single_unit_fraction(self):
        assert enumerate_reciprocal_tuples(1, Fraction(1, 7)) == [(7,)]

    def test_empty_cases(self):
        assert enumerate_reciprocal_tuples(0, 0) == [()]
        assert enumerate_reciprocal_tuples(0, 1) == []
        assert enumerate_reciprocal_tuples(1, Fraction(2, 3)) == []
        assert enumerate_reciprocal_tuples(2, 3) == []

    def test_matches_brute_force(self):
        for k in range(1, 5):
            for c in [Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(5, 6), Fraction(2)]:
                assert enumerate_reciprocal_tuples(k, c) == brute_reciprocal_tuples(k, c, 2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 4), st.fractions(min_value=0, max_value=3))
    def test_every_tuple_checks_out(self, k, c):
        if c.denominator > 12:
            return
        tuples = enumerate_reciprocal_tuples(k, c)
        assert len(set(tuples)) == len(tuples)
        for tup in tuples:
            assert list(tup) == sorted(tup)
            assert all(n >= 2 for n in tup)
            assert sum(Fraction(1, n) for n in tup) == c


class TestEnumerateConfigurations:
    def test_quarter_sum_weak_nef(self):
        configs = enumerate_configurations(invariants(2, 0, 1, Fraction(1, 4)), WEAK_NEF)
        assert configs == [SingularityConfiguration(terminal_orders=(2,))]

    def test_zero_sum_gives_smooth_configuration(self):
        configs = enumerate_configurations(invariants(2, 0, 1, 0), WEAK_NEF)
        assert configs == [SingularityConfiguration()]

    def test_half_sum_canonical_without_cusps(self):
        configs = enumerate_configurations(invariants(2, 0, 1, Fraction(1, 2), cusps=0), CANONICAL)
        assert configs == [
            SingularityConfiguration(terminal_orders=(2, 2)),
            SingularityConfiguration(dihedral_count=1),
        ]

    def test_cusp_count_pins_configurations(self):
        configs = enumerate_configurations(invariants(2, 0, 1, Fraction(5, 4), cusps=1), CANONICAL)
        assert all(cfg.cusp_count == 1 for cfg in configs)
        assert SingularityConfiguration(terminal_orders=(2,), cusp_count=1) in configs

    def test_every_configuration_matches_sum_exactly(self):
        for s in [Fraction(1, 2), Fraction(3, 4), Fraction(7, 6), Fraction(2)]:
            for mode, cusps in ((WEAK_NEF, None), (CANONICAL, 0), (CANONICAL, 1)):
                if mode is WEAK_NEF:
                    inv = invariants(2, 0, 1, s)
                elif cusps is not None and cusps > s:
                    continue
                else:
                    inv = invariants(2, 0, 1, s, cusps=cusps)
                for cfg in enumerate_configurations(inv, mode):
                    assert cfg.contribution_sum() == s

    def test_unrealizable_sum_yields_nothing(self):
        assert enumerate_configurations(invariants(2, 0, 1, Fraction(1, 5)), WEAK_NEF) == []


class TestIndexBounds:
    def test_single_half_point(self):
        result = index_bounds([SingularityConfiguration(terminal_orders=(2,))], WEAK_NEF)
        assert result.max_terminal_order == 2
        assert list(result.index_candidates.values()) == [2]

    def test_smooth_configuration(self):
        result = index_bounds([SingularityConfiguration()], WEAK_NEF)
        assert result.max_terminal_order == 1
        assert list(result.index_candidates.values()) == [1]

    def test_canonical_doubles_lcm(self):
        result = index_bounds([SingularityConfiguration(terminal_orders=(3, 4))], CANONICAL)
        assert list(result.index_candidates.values()) == [24]

    def test_empty_configuration_list_rejected(self):
        with pytest.raises(ValidationError):
            index_bounds([], WEAK_NEF)


class TestComputeN1:
    def test_reference_values(self):
        assert compute_n1(invariants(2, 0, 1, 0), 1).n1 == 8
        assert compute_n1(invariants(2, 0, 1, 0), 1).gamma == 3
        assert compute_n1(invariants(1, 1, 1, 0), 2).n1 == 17

    def test_gamma_clamped_at_zero(self):
        result = compute_n1(invariants(2, -10, 1, 0), 1)
        assert result.gamma == 0
        assert result.n1 == 5

    def test_monotone_in_index(self):
        for inv in [invariants(2, 0, 1, 0), invariants(Fraction(1, 2), 3, 1, 0)]:
            values = [compute_n1(inv, i).n1 for i in range(1, 51)]
            assert values == sorted(values)
            assert min(values) >= 5

    def test_threshold_report(self):
        ok = compute_n1(invariants(2, 0, 1, 0), 1)
        assert ok.square_threshold_holds and ok.curve_threshold_holds
        small = compute_n1(invariants(Fraction(1, 2), 0, 1, 0), 1)
        assert not small.square_threshold_holds

    def test_invalid_index_rejected(self):
        with pytest.raises(ValidationError):
            compute_n1(invariants(2, 0, 1, 0), 0)


class TestPipeline:
    def test_smooth_model(self):
        values = {m: Fraction(m * m + 1) for m in range(0, 8)}
        report = pipeline(HilbertSamples(values), WEAK_NEF)
        assert report.invariants.k2 == 2 and report.invariants.k_dot_ky == 0
        assert report.configurations == (SingularityConfiguration(),)
        assert report.n1_worst == 8

    def test_roundtrip_many_models(self):
        rng = random.Random(202)
        for trial in range(40):
            mode = WEAK_NEF if trial % 2 == 0 else CANONICAL
            k2, k_dot_ky, chi_o, data, terminals, dihedrals, cusps, period = (
                make_synthetic_model(rng, mode)
            )
            values = model_samples(k2, k_dot_ky, chi_o, data, 3 * period)
            hint = period if trial % 4 < 2 else None
            report = pipeline(HilbertSamples(values, period_hint=hint), mode)
            inv = report.invariants
            assert (inv.k2, inv.k_dot_ky, inv.chi_o) == (k2, k_dot_ky, chi_o)
            assert inv.contribution_sum == -sum(f.contribution(d, 1) for d in data)
            generating = SingularityConfiguration(
                terminal_orders=tuple(sorted(t.n for t in terminals)),
                dihedral_count=dihedrals,
                cusp_count=cusps if mode == CANONICAL else 0,
            )
            assert generating in report.configurations
            if mode == CANONICAL:
                assert inv.cusp_count == cusps

    def test_unrealizable_sum_raises(self):
        # shifting every odd sample keeps the quasi-polynomial shape but moves
        # the contribution sum to 1/5, which no configuration can hit
        data = [f.Terminal(f.CyclicType(2, 1))]
        values = {m: f.global_chi(2, 1, 1, data, m) for m in range(0, 7)}
        broken = {m: v + (Fraction(1, 20) if m % 2 else 0) for m, v in values.items()}
        with pytest.raises(InconsistentSamplesError, match="no singularity configuration"):
            pipeline(HilbertSamples(broken, period_hint=2), WEAK_NEF)


class TestRelateModels:
    def test_identical_tables_no_cusps(self):
        table = {0: 1, 1: 3, 2: 9}
        assert relate_models(table, table, 0)

    def test_cusp_shift_accepted(self):
        canon = {0: 2, 1: 3, 2: 9, 3: 19}
        weak = {0: 0, 1: 3, 2: 9, 3: 19}
        assert relate_models(weak, canon, 2)

    def test_wrong_shift_rejected(self):
        canon = {0: 2, 1: 3}
        weak = {0: 1, 1: 4}
        assert not relate_models(weak, canon, 1)

    def test_key_sets_must_match(self):
        with pytest.raises(ValidationError):
            relate_models({0: 1}, {0: 1, 1: 2}, 0)

    def test_zero_must_be_present(self):
        with pytest.raises(ValidationError):
            relate_models({1: 1}, {1: 1}, 0)
