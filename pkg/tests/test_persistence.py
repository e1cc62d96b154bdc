"""Filtered complexes, barcodes, Euler characteristic jumps, and the
persistence zeta function, cross-checked against the rank-nullity oracle."""

from fractions import Fraction as F

import pytest

from helpers import fresh_rng, probe_levels, random_complex
from reebzeta import (Bar, Barcode, FilteredComplex, INFINITE_DEATH,
                      NovikovSeries, barcode_decompose, euler_jump,
                      homology_dims, validate_complex, zeta_barcode,
                      zeta_persistence)
from reebzeta.errors import (DuplicateLabel, FiltrationViolation,
                             GradingViolation, NotSquareZero)


def pair_complex():
    # d(x) = y with F(x) = 2 > F(y) = 1 and opposite gradings
    return FilteredComplex([("x", 1, 2), ("y", 0, 1)], [("x", "y", 1)])


class TestValidation:
    def test_valid_two_generator_complex(self):
        c = pair_complex()
        assert validate_complex(c) is c

    def test_equal_filtration_is_a_violation(self):
        c = FilteredComplex([("x", 1, 1), ("y", 0, 1)], [("x", "y", 1)])
        with pytest.raises(FiltrationViolation):
            validate_complex(c)

    def test_grading_must_change(self):
        c = FilteredComplex([("x", 1, 2), ("y", 1, 1)], [("x", "y", 1)])
        with pytest.raises(GradingViolation):
            validate_complex(c)

    def test_square_zero_enforced(self):
        c = FilteredComplex(
            [("x", 1, 3), ("y", 0, 2), ("w", 1, 1)],
            [("x", "y", 1), ("y", "w", 1)])
        with pytest.raises(NotSquareZero):
            validate_complex(c)

    def test_square_zero_cancellation_is_fine(self):
        c = FilteredComplex(
            [("x", 0, 4), ("y1", 1, 3), ("y2", 1, 2), ("z", 0, 1)],
            [("x", "y1", 1), ("x", "y2", 1),
             ("y1", "z", 1), ("y2", "z", -1)])
        assert validate_complex(c) is c

    def test_duplicate_generator_labels(self):
        with pytest.raises(DuplicateLabel):
            FilteredComplex([("x", 0, 1), ("x", 1, 2)])

    def test_unknown_label_in_boundary(self):
        with pytest.raises(KeyError):
            FilteredComplex([("x", 0, 1)], [("x", "nope", 1)])


class TestHomologyDims:
    def test_cycle_before_killer_appears(self):
        assert homology_dims(pair_complex(), F(3, 2)) == (1, 0)

    def test_class_killed_at_the_killer_level(self):
        assert homology_dims(pair_complex(), 2) == (0, 0)

    def test_empty_complex(self):
        assert homology_dims(FilteredComplex([]), 7) == (0, 0)


class TestBarcodeDecompose:
    def test_single_pair(self):
        assert barcode_decompose(pair_complex()) == \
            Barcode([Bar(1, 2, 0)])

    def test_single_immortal_class(self):
        c = FilteredComplex([("z", 0, F(5, 2))])
        assert barcode_decompose(c) == Barcode([Bar(F(5, 2), INFINITE_DEATH, 0)])

    def test_direct_sum_same_filtration(self):
        c = FilteredComplex([("a", 0, 1), ("b", 1, 1)])
        assert barcode_decompose(c) == Barcode([
            Bar(1, INFINITE_DEATH, 0), Bar(1, INFINITE_DEATH, 1)])

    def test_propagates_validation_errors(self):
        c = FilteredComplex([("x", 1, 1), ("y", 0, 1)], [("x", "y", 1)])
        with pytest.raises(FiltrationViolation):
            barcode_decompose(c)

    def test_determinism(self):
        rng = fresh_rng(301)
        for _ in range(10):
            c, _ = random_complex(rng)
            assert barcode_decompose(c) == barcode_decompose(c)


class TestBars:
    def test_birth_before_death_required(self):
        with pytest.raises(ValueError):
            Bar(2, 1, 0)
        with pytest.raises(ValueError):
            Bar(1, 1, 0)

    def test_infinite_death_allowed(self):
        bar = Bar(1, INFINITE_DEATH, 1)
        assert not bar.is_finite

    def test_barcode_sorted_multiset(self):
        bars = [Bar(2, INFINITE_DEATH, 0), Bar(1, 2, 1), Bar(1, 2, 0)]
        ordered = list(Barcode(bars))
        assert ordered == [Bar(1, 2, 0), Bar(1, 2, 1),
                           Bar(2, INFINITE_DEATH, 0)]


class TestEulerJump:
    def test_birth_and_death_of_even_bar(self):
        barcode = Barcode([Bar(1, 2, 0)])
        assert euler_jump(barcode, 1) == 1
        assert euler_jump(barcode, 2) == -1

    def test_zero_away_from_endpoints(self):
        barcode = Barcode([Bar(1, 2, 0), Bar(F(1, 2), INFINITE_DEATH, 1)])
        assert euler_jump(barcode, F(3, 2)) == 0
        assert euler_jump(barcode, 17) == 0

    def test_odd_immortal_class(self):
        assert euler_jump(Barcode([Bar(1, INFINITE_DEATH, 1)]), 1) == -1


class TestZetaBarcode:
    def test_finite_bar(self):
        assert zeta_barcode(Barcode([Bar(1, 2, 0)]), 3) == \
            NovikovSeries({1: 1, 2: -1}, 3)

    def test_empty_barcode(self):
        assert zeta_barcode(Barcode(), 3) == NovikovSeries.zero(3)

    def test_odd_infinite_bar(self):
        assert zeta_barcode(Barcode([Bar(1, INFINITE_DEATH, 1)]), 3) == \
            NovikovSeries({1: -1}, 3)

    def test_death_beyond_cutoff_truncated(self):
        assert zeta_barcode(Barcode([Bar(1, 9, 0)]), 3) == \
            NovikovSeries({1: 1}, 3)


class TestZetaPersistence:
    def test_pair_complex(self):
        assert zeta_persistence(pair_complex(), 3) == \
            NovikovSeries({1: 1, 2: -1}, 3)

    def test_opposite_parities_cancel(self):
        c = FilteredComplex([("a", 0, 1), ("b", 1, 1)])
        assert zeta_persistence(c, 5) == NovikovSeries.zero(5)

    def test_single_even_class(self):
        c = FilteredComplex([("z", 0, F(7, 3))])
        assert zeta_persistence(c, 4) == NovikovSeries({F(7, 3): 1}, 4)


class TestNormalFormOracle:
    def test_decomposition_recovers_construction_barcode(self):
        rng = fresh_rng(302)
        for _ in range(50):
            c, expected = random_complex(rng)
            assert barcode_decompose(c) == expected

    def test_barcode_dims_match_rank_oracle(self):
        rng = fresh_rng(303)
        for _ in range(40):
            c, _ = random_complex(rng)
            barcode = barcode_decompose(c)
            for level in probe_levels(c):
                assert barcode.graded_dims(level) == homology_dims(c, level)

    def test_zeta_persistence_equals_zeta_barcode(self):
        rng = fresh_rng(304)
        for _ in range(30):
            c, _ = random_complex(rng)
            barcode = barcode_decompose(c)
            assert zeta_persistence(c, 30) == zeta_barcode(barcode, 30)

    def test_jumps_equal_signed_generator_counts(self):
        # The jump at a level only sees the generators entering there,
        # never the differential.
        rng = fresh_rng(305)
        for _ in range(30):
            c, _ = random_complex(rng)
            barcode = barcode_decompose(c)
            for level in {g.filtration for g in c.generators}:
                signed = sum(-1 if g.eps else 1
                             for g in c.generators if g.filtration == level)
                assert euler_jump(barcode, level) == signed

    def test_shift_reindexes_exponents(self):
        rng = fresh_rng(306)
        delta = F(5, 3)
        for _ in range(15):
            c, _ = random_complex(rng)
            shifted = zeta_persistence(c.shifted(delta), 30 + delta)
            base = zeta_persistence(c, 30)
            assert [(s + delta, v) for s, v in base.items()] == \
                list(shifted.items())
