"""Tests for Pachner-move equations."""

from fractions import Fraction

import pytest

from src.catdata import parse_dataset
from src.config.settings import Settings
from src.exactnum import ONE, SQRT2, AlgNum
from src.pachner import (
    calibrate_symmetry,
    compare_complementary,
    cone_breakdown,
    count_equations,
    generate,
    sampled_boundaries,
    side_triangulations,
    split_for,
    spot_check,
    verify,
)
from src.utils.errors import ContractError

pytestmark = pytest.mark.unit

EMPTY_TABLE = """n 1
labels 0 j
labels 1 p
trace j 1
gdim  j 1
trace p 1
gdim  p 1
"""


@pytest.fixture
def broken(semisimple):
    """Block j1 with F = 3 instead of its dimension 2."""
    return semisimple.with_fvalue("j1", AlgNum(3))


class TestSplits:
    """Tests for move types of a dataset."""

    def test_split_types(self, semisimple):
        assert split_for(semisimple, 1).type == (1, 3)
        assert split_for(semisimple, 2).type == (2, 2)
        assert split_for(semisimple, 3).type == (3, 1)

    @pytest.mark.parametrize("k", [0, 4])
    def test_k_out_of_range(self, semisimple, k):
        with pytest.raises(ContractError):
            split_for(semisimple, k)
        with pytest.raises(ContractError):
            verify(semisimple, k)

    def test_side_triangulations(self):
        old, new, boundary = side_triangulations(4, 2)
        assert len(old.facets) == 2
        assert len(new.facets) == 4
        assert boundary.facets == new.boundary().facets


class TestGenerate:
    """Tests for equation generation on 1+1 data."""

    def test_one_equation_per_block(self, semisimple):
        """Test that each block gives one boundary coloring with both sides equal to d."""
        equations = list(generate(semisimple, 1))
        assert len(equations) == 2
        assert [eq.lhs for eq in equations] == [ONE, AlgNum(2)]
        assert all(eq.holds for eq in equations)
        assert equations[0].boundary == ("j0",) * 3 + ("p0",) * 3
        assert equations[0].simplices == ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3))
        assert equations[1].coloring().get((1, 2)) == "p1"

    def test_count_equations(self, semisimple):
        count = count_equations(semisimple, 2)
        assert (count.move, count.raw, count.nonzero) == ("2,2", 2, 2)

    def test_complementary_moves_agree(self, semisimple, broken):
        assert compare_complementary(semisimple, 1)
        assert compare_complementary(broken, 1)

    def test_empty_table(self):
        """Test that a dataset without rows has no equations."""
        data = parse_dataset(EMPTY_TABLE, source="empty")
        report = verify(data, 1)
        assert report.total == 0
        assert report.ok


class TestVerify:
    """Tests for exact verification."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_semisimple_moves_hold(self, semisimple, k):
        report = verify(semisimple, k)
        assert report.ok
        assert (report.total, report.passed, report.failed) == (2, 2, 0)
        assert report.dataset == "semisimple:1,2"

    def test_fault_injection_is_reported(self, broken):
        """Test that an edited F value fails the (1,3) move and names its row."""
        report = verify(broken, 1)
        assert (report.total, report.passed, report.failed) == (2, 1, 1)
        (failure,) = report.first_failures
        assert failure.move == "1,3"
        assert failure.lhs == 3
        assert failure.rhs == Fraction(27, 4)
        assert failure.rows == ["j1"]
        assert "FAIL" in report.render()
        assert report.render_machine().startswith("pachner\t1,3\t2\t1\t1")

    def test_edited_value_survives_the_flip(self, broken):
        """Test that the (2,2) move does not detect a rescaled block."""
        assert verify(broken, 2).ok

    def test_max_failures(self, broken):
        report = verify(broken, 1, max_failures=0)
        assert report.failed == 1
        assert report.first_failures == []
        assert "1 more failures" in report.render()


class TestSpotCheck:
    """Tests for seeded spot checks."""

    def test_sample(self, semisimple):
        report = spot_check(semisimple, 1, sample_size=1, seed=3)
        assert (report.total, report.passed) == (1, 1)
        assert (report.sample_size, report.seed) == (1, 3)

    def test_sample_larger_than_population(self, broken):
        report = spot_check(broken, 3, sample_size=10, seed=1)
        assert report.total == 2
        assert report.failed == 1
        assert report.first_failures[0].rows == ["j1"]

    def test_zero_sample(self, semisimple):
        report = spot_check(semisimple, 1, sample_size=0)
        assert report.total == 0
        assert report.ok

    def test_negative_sample(self, semisimple):
        with pytest.raises(ContractError):
            spot_check(semisimple, 1, sample_size=-1)

    def test_sampled_boundaries_are_deterministic(self, semisimple):
        first = sampled_boundaries(semisimple, 2, sample_size=1, seed=5)
        assert first == sampled_boundaries(semisimple, 2, sample_size=1, seed=5)
        assert len(first) == 1
        assert len(sampled_boundaries(semisimple, 2, sample_size=9, seed=5)) == 2


class TestConeBreakdown:
    """Tests for the cone side of the (1,5) move on the Ising data."""

    def test_trivial_row(self, ising):
        """Test the all-unit row: three edge groups summing to 2, weighted total 1."""
        breakdown = cone_breakdown(ising, "0^0")
        values = {(g.apex, g.edges): g.value for g in breakdown.groups}
        assert values == {
            ("pt", "5x1"): Fraction(1, 2),
            ("pt", "5xg"): Fraction(1, 2),
            ("pt", "5xtau"): ONE,
        }
        assert breakdown.total == 1
        assert breakdown.holds
        assert "total 1" in breakdown.render()

    def test_tau_row(self, ising):
        breakdown = cone_breakdown(ising, "1^0_tau")
        assert len(breakdown.groups) == 4
        assert all(g.value == SQRT2 / 4 for g in breakdown.groups)
        assert breakdown.total == SQRT2 / 2
        assert breakdown.expected == SQRT2 / 2


class TestCalibration:
    """Tests for symmetry calibration."""

    def test_calibration_rows(self, semisimple):
        """Test one row per candidate action; checksums only apply to n = 3."""
        report = calibrate_symmetry(semisimple, moves=[1])
        assert [row.symmetry for row in report.rows] == [
            "identity",
            "swap_bg",
            "swap_c",
            "swap_bg_c",
        ]
        assert all(row.totals == {"1,3": 2} for row in report.rows)
        assert not any(row.matches_checksum for row in report.rows)


class TestIsingSample:
    """Sampled checks on the Ising data."""

    def test_cone_move_sample(self, ising):
        """Test a seeded sample of (1,5) equations, one 4-simplex against its cone."""
        report = spot_check(ising, 1, sample_size=25, seed=7)
        assert report.ok, report.render()
        assert (report.total, report.passed) == (25, 25)

    def test_sampled_boundaries_are_table_keys(self, ising):
        """Test that the small side of the (1,5) move enumerates exactly the F table."""
        keys = sampled_boundaries(ising, 1, sample_size=5000, seed=1)
        assert len(keys) == Settings.PACHNER_CHECKSUM[(1, 5)]
        assert set(keys) == set(ising.fsymbols)


@pytest.mark.slow
class TestIsingMoves:
    """Full verification on the Ising data."""

    @pytest.mark.parametrize("k, move", [(1, (1, 5)), (2, (2, 4)), (3, (3, 3))])
    def test_moves_hold(self, ising, k, move):
        """Test that every equation holds and the totals match the published counts."""
        report = verify(ising, k, jobs=Settings.JOBS)
        assert report.ok, report.render()
        assert report.total == Settings.PACHNER_CHECKSUM[move]

    @pytest.mark.parametrize("k, move", [(1, (1, 5)), (2, (2, 4))])
    def test_every_equation_is_nonzero(self, ising, k, move):
        count = count_equations(ising, k, jobs=Settings.JOBS)
        assert count.raw == count.nonzero == Settings.PACHNER_CHECKSUM[move]

    def test_spot_check(self, ising):
        report = spot_check(ising, 2, sample_size=20, seed=1)
        assert report.ok
        assert report.total == 20

    def test_calibration_picks_identity(self, ising):
        report = calibrate_symmetry(ising, moves=[1, 2, 3], jobs=Settings.JOBS)
        matching = [row.symmetry for row in report.rows if row.matches_checksum]
        assert matching == ["identity"]
        assert report.rows[0].failures == {"1,5": 0, "2,4": 0, "3,3": 0}
