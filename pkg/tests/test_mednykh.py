"""Tests for finite groups and Mednykh's formula."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.config.settings import Settings
from src.mednykh import (
    GroupTable,
    IrrepDims,
    bundled_groups,
    conjugacy_classes,
    count_homs,
    count_homs_brute,
    euler_of_genus,
    hom_side,
    mednykh_check,
    mednykh_report,
    parse_group,
    state_sum_side,
    triangulated_check,
)
from src.simplicial import boundary_of_simplex, cone_over, torus7
from src.utils.errors import ContractError, DatasetError, ResourceLimitError

pytestmark = pytest.mark.unit

GROUPS = bundled_groups()


def _group(name):
    return GROUPS[name][0]


class TestGroupTable:
    """Tests for multiplication tables."""

    def test_constructors(self):
        assert _group("Z4").is_abelian
        assert _group("Z2xZ2").name == "Z2xZ2"
        assert _group("Z2xZ2").order == 4
        assert not _group("S3").is_abelian
        assert not _group("Q8").is_abelian
        assert GroupTable.dihedral(3).order == 6

    def test_inverse_and_commutator(self):
        s3 = _group("S3")
        for a in range(6):
            assert s3.multiply(a, s3.inverse[a]) == s3.identity
            assert s3.commutator(a, a) == s3.identity
        z3 = GroupTable.cyclic(3)
        assert z3.inverse == (0, 2, 1)
        assert set(z3.commutator_table[1]) == {0}

    @pytest.mark.parametrize(
        "mul",
        [
            [[0, 1], [1, 1]],
            [[0, 1, 2], [1, 2, 0]],
            [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
            [[0, 1], [1, 5]],
        ],
    )
    def test_axioms_enforced(self, mul):
        """Test that tables violating the group axioms are rejected."""
        with pytest.raises(ValidationError):
            GroupTable(order=len(mul), mul=mul)

    def test_non_associative_table(self):
        # a Latin square with identity 0 that is not associative
        mul = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(ValidationError, match="Associativity"):
            GroupTable(order=5, mul=mul)

    def test_from_permutations_needs_generators(self):
        with pytest.raises(ContractError):
            GroupTable.from_permutations([])
        with pytest.raises(ContractError):
            GroupTable.from_permutations([(0, 0, 1)])

    @pytest.mark.parametrize(
        "name, sizes",
        [("S3", [1, 2, 3]), ("Q8", [1, 1, 2, 2, 2]), ("D4", [1, 1, 2, 2, 2])],
    )
    def test_conjugacy_classes(self, name, sizes):
        classes = conjugacy_classes(_group(name))
        assert sorted(len(c) for c in classes) == sizes
        assert len(classes) == len(GROUPS[name][1].dims)


class TestCounting:
    """Tests for homomorphism counts."""

    @pytest.mark.parametrize(
        "name, genus, expected",
        [
            ("Z2", 1, 4),
            ("Z4", 2, 256),
            ("S3", 0, 1),
            ("S3", 1, 18),
            ("S3", 2, 486),
            ("Q8", 1, 40),
            ("D4", 1, 40),
        ],
    )
    def test_known_counts(self, name, genus, expected):
        assert count_homs(_group(name), genus) == expected

    @pytest.mark.parametrize("name", ["Z3", "S3", "Q8"])
    def test_matches_brute_force(self, name):
        g = _group(name)
        for genus in range(3 if g.order <= 6 else 2):
            assert count_homs(g, genus) == count_homs_brute(g, genus)

    @pytest.mark.parametrize("n, genus", [(2, 1), (3, 2), (5, 1)])
    def test_abelian_groups(self, n, genus):
        """Test that every tuple is a homomorphism for an abelian group."""
        assert count_homs(GroupTable.cyclic(n), genus) == n ** (2 * genus)

    def test_negative_genus(self):
        with pytest.raises(ContractError):
            count_homs(_group("Z2"), -1)

    def test_tuple_cap(self, monkeypatch):
        monkeypatch.setattr(Settings, "MAX_HOM_TUPLES", 10)
        with pytest.raises(ResourceLimitError):
            count_homs(_group("S3"), 2)
        with pytest.raises(ResourceLimitError):
            count_homs_brute(_group("S3"), 2)


class TestFormula:
    """Tests for both sides of the formula."""

    def test_sides(self):
        s3, dims = GROUPS["S3"]
        assert euler_of_genus(3) == -4
        assert hom_side(s3, 0) == 6
        assert state_sum_side(dims, 0) == 6
        assert hom_side(s3, 1) == 3
        assert state_sum_side(dims, 2) == Fraction(9, 4)

    @pytest.mark.parametrize("name", sorted(GROUPS))
    @pytest.mark.parametrize("genus", [0, 1, 2, 3])
    def test_bundled_groups(self, name, genus):
        table, dims = GROUPS[name]
        assert mednykh_check(table, dims, genus)

    def test_wrong_dimensions_fail(self):
        s3 = _group("S3")
        dims = IrrepDims(dims=(1, 1, 1, 1, 1, 1))
        assert mednykh_check(s3, dims, 0)
        assert not mednykh_check(s3, dims, 1)

    def test_report(self):
        s3, dims = GROUPS["S3"]
        report = mednykh_report(s3, dims, 2, name="S3")
        assert report.holds
        assert (report.homs, report.lhs, report.rhs) == (486, Fraction(9, 4), Fraction(9, 4))
        assert "holds" in report.render()
        assert report.render_machine() == "mednykh\tS3\t2\t486\t9/4\t9/4\ttrue"

    def test_triangulated_surfaces(self):
        assert triangulated_check([1, 2], torus7())
        assert triangulated_check(IrrepDims(dims=(1, 1, 2)), boundary_of_simplex(3))

    def test_triangulated_needs_closed_surface(self):
        with pytest.raises(ContractError):
            triangulated_check([1], boundary_of_simplex(4))
        with pytest.raises(ContractError):
            triangulated_check([1], cone_over(boundary_of_simplex(2)))


class TestIrrepDims:
    """Tests for IrrepDims."""

    def test_rejects_non_positive(self):
        with pytest.raises(ValidationError):
            IrrepDims(dims=(1, 0))
        with pytest.raises(ValidationError):
            IrrepDims(dims=())

    def test_check_order(self):
        IrrepDims(dims=(1, 1, 2)).check_order(6)
        with pytest.raises(DatasetError, match="square-sum to 5"):
            IrrepDims(dims=(1, 2)).check_order(6)


class TestParseGroup:
    """Tests for the group file format."""

    def test_round_trip(self):
        s3, dims = GROUPS["S3"]
        table, parsed = parse_group(s3.to_text(dims.dims), source="s3")
        assert table.mul == s3.mul
        assert parsed == dims
        assert table.name == "s3"

    def test_comments_and_blank_lines(self):
        text = "# Z2\norder 2\n\n0 1  # first row\n1 0\nidentity 0\nirreps 1 1\n"
        table, dims = parse_group(text)
        assert table.order == 2
        assert dims.dims == (1, 1)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "expected 'order n'"),
            ("order 2\n0 1\n1 0\nirreps 1 1\n", "missing 'identity'"),
            ("order 2\n0 1\n1 0\nidentity 0\n", "missing 'irreps'"),
            ("order 2\n0 1\n1 1\nidentity 0\nirreps 1 1\n", "<text>"),
            ("order 2\n0 1\n1 0\nidentity 0\nirreps 1 2\n", "square-sum"),
            ("order two\n", "<text>"),
        ],
    )
    def test_malformed(self, text, fragment):
        with pytest.raises(DatasetError, match=fragment):
            parse_group(text)
