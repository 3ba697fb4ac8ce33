"""Tests for category datasets, the symmetry closure and dataset validation."""

from collections import Counter
from fractions import Fraction

import pytest

from src.catdata import (
    OrderedLabeledSimplex,
    SymmetryAction,
    complete_rows,
    load_semisimple1,
    parse_dataset,
    permuted_key,
    validate,
)
from src.catdata.completion import ising_keys, sector, tetrahedron_label
from src.config.settings import Settings
from src.exactnum import ONE, SQRT2, THETA, ZERO, AlgNum
from src.simplicial.faces import sub_face_positions
from src.utils.errors import ContractError, DatasetError, LabelLookupError

pytestmark = pytest.mark.unit

TOY_KEY = ("j", "j", "j", "p", "p", "p")

HEADER = """n 1
labels 0 j
labels 1 p
trace j 2
gdim  j 1
trace p 1
gdim  p 2
"""


class TestIsingValues:
    """Golden values of the bundled Ising-type dataset."""

    @pytest.mark.parametrize(
        "row_id, expected",
        [
            ("0^0", ONE),
            ("0^6", ONE),
            ("1^0_tau", SQRT2 / 2),
            ("1^+_g0tau", SQRT2 / 2),
            ("2^+_tau", THETA / 2),
            ("2^-_g1tau", THETA**3 / 2),
            ("2^+_g5", ONE),
            ("3_g2tau", ONE),
            ("4_g0tau", ONE),
        ],
    )
    def test_row_values(self, ising, row_id, expected):
        """Test that a table row's key evaluates to its listed value."""
        row = ising.row(row_id)
        assert row.value == expected
        assert ising.fsymbol(row.labels) == expected
        assert ising.row_of(row.labels) == row_id

    def test_table_shape(self, ising):
        """Test the row count and label counts."""
        assert ising.n == 3
        assert len([row for row in ising.rows if "/" not in row.row_id]) == 54
        assert len(ising.fsymbols) == 2044
        assert ising.label_names(0) == ["pt"]
        assert ising.label_names(1) == ["1", "tau", "g"]
        assert len(ising.labels_of(2)) == 7
        assert len(ising.labels_of(3)) == 20
        assert ising.unit == "1"
        assert ising.symmetry is SymmetryAction.IDENTITY

    def test_traces_and_weights(self, ising):
        """Test Tr, mu and the interior weight Tr/mu."""
        assert ising.trace("tau") == SQRT2
        assert ising.globaldim("pt") == 2
        assert ising.weight("pt") == Fraction(1, 2)
        assert ising.weight("tau") == SQRT2 / 2
        assert ising.weight("b_tau") == SQRT2
        assert ising.weight("D_gtau") == ONE

    def test_closure_under_vertex_permutations(self, ising):
        """Test that permuted keys of a row carry the row's value."""
        row = ising.row("2^+_g1tau")
        for perm in [(1, 0, 2, 3, 4), (4, 3, 2, 1, 0), (2, 3, 4, 0, 1)]:
            key = permuted_key(row.labels, 3, perm, SymmetryAction.IDENTITY)
            assert ising.fsymbol(key) == row.value

    def test_unknown_key_is_zero(self, ising):
        """Test that a key outside the closure has F value zero."""
        key = list(ising.row("0^0").labels)
        key[-1] = "D_gtau"
        assert ising.fsymbol(key) == ZERO
        assert ising.row_of(key) is None

    def test_fsymbol_rejects_wrong_dimension(self, ising):
        """Test that fsymbol only accepts (n+1)-simplices."""
        triangle = OrderedLabeledSimplex(2, ["pt"] * 3 + ["1"] * 3 + ["a+"])
        with pytest.raises(ContractError):
            ising.fsymbol(triangle)

    def test_validates_cleanly(self, ising):
        """Test that the bundled dataset passes every invariant check."""
        report = validate(ising)
        assert report.ok, report.violations

    def test_ftilde_metadata(self, ising):
        """Test that unnormalized values are attached to their rows."""
        assert ising.row("1^0_tau").ftilde == SQRT2
        assert ising.row("1^2_g0").ftilde == Fraction(1, 2)
        assert ising.row("0^1").ftilde is None


class TestIsingCompletion:
    """Tests for the F table generated from the fusion and parity rules."""

    def test_every_listed_row_is_generated(self, ising):
        """Test that each listed row is an admissible labeling with its own value."""
        generated = dict(ising_keys())
        listed = [row for row in ising.rows if "/" not in row.row_id]
        for row in listed:
            assert row.labels in generated, row.row_id
            assert ising.fsymbol(row.labels) == row.value
            assert ising.row_of(row.labels) == row.row_id

    def test_closure_adds_nothing(self, ising):
        """Test that the generated table is closed under vertex permutations."""
        assert set(ising.fsymbols) == {key for key, _ in ising_keys()}
        assert ising.conflicts == ()

    def test_family_sizes(self, ising):
        counts = Counter(sector(key[5:15]) for key in ising.fsymbols)
        assert counts == {
            "0": 64,
            "1_g": 320,
            "2_g": 640,
            "1_tau": 40,
            "2pm_gtau": 320,
            "3_gtau": 240,
            "2pm_tau": 20,
            "1pm_gtau": 40,
            "2_gtau": 120,
            "4_gtau": 240,
        }

    @pytest.mark.parametrize(
        "family, expected",
        [
            ("0", ONE),
            ("1_g", ONE),
            ("2_g", ONE),
            ("1_tau", SQRT2 / 2),
            ("2pm_gtau", THETA**3 / 2),
            ("3_gtau", ONE),
            ("2pm_tau", THETA / 2),
            ("1pm_gtau", SQRT2 / 2),
            ("2_gtau", THETA**3 / 2),
            ("4_gtau", ONE),
        ],
    )
    def test_value_depends_on_edges_only(self, ising, family, expected):
        values = {v for key, v in ising.fsymbols.items() if sector(key[5:15]) == family}
        assert values == {expected}

    def test_glued_pairs(self, ising):
        """Test that two simplices sharing a tetrahedron can be colored 30464 ways."""
        positions = sub_face_positions(5, 3, (0, 1, 2, 3))
        per_tet = Counter(tuple(key[p] for p in positions) for key in ising.fsymbols)
        assert sum(per_tet.values()) == Settings.PACHNER_CHECKSUM[(1, 5)]
        assert sum(c * c for c in per_tet.values()) == Settings.PACHNER_CHECKSUM[(2, 4)]

    def test_generated_row_names(self, ising):
        generated = [row for row in ising.rows if "/" in row.row_id]
        assert generated
        for row in generated:
            family, _ = row.row_id.split("/")
            assert sector(row.labels[5:15]) == family

    def test_symmetry_only_permutes(self, ising):
        """Test that vertex permutations move labels without mirroring the crossings."""
        row = ising.row("2^+_g1")
        key = permuted_key(row.labels, 3, (1, 0, 2, 3, 4), SymmetryAction.IDENTITY)
        assert ising.fsymbol(key) == ONE
        mirrored = permuted_key(row.labels, 3, (1, 0, 2, 3, 4), SymmetryAction.SWAP_BG)
        assert ising.fsymbol(mirrored) == ZERO


class TestTetrahedronLabels:
    """Tests for the tetrahedron labels fixed by edges and faces."""

    ONES = ("1",) * 6

    @pytest.mark.parametrize(
        "faces, expected",
        [
            (("a+",) * 4, "A_0"),
            (("a-", "a+", "a-", "a+"), "A_2"),
            (("a-",) * 4, "A_4"),
            (("a-", "a+", "a+", "a+"), None),
        ],
    )
    def test_unit_edges(self, faces, expected):
        assert tetrahedron_label(self.ONES, faces) == expected

    def test_g_corner(self):
        """Test a g corner at vertex 3: the crossing count is even, the sign is face 012."""
        edges = ("1", "1", "g", "1", "g", "g")
        assert tetrahedron_label(edges, ("a-", "b_g1", "b_g1", "b_g0")) == "B_g1-"
        assert tetrahedron_label(edges, ("a+", "b_g1", "b_g0", "b_g0")) is None

    def test_g_square(self):
        """Test that two crossings through one unit edge differ from two through both."""
        edges = ("1", "g", "g", "g", "g", "1")
        assert tetrahedron_label(edges, ("b_g1", "b_g1", "b_g0", "b_g0")) == "C_g2"
        assert tetrahedron_label(edges, ("b_g1", "b_g0", "b_g0", "b_g1")) == "C_g1"
        assert tetrahedron_label(edges, ("b_g1",) * 4) == "C_g3"

    def test_tau_corner(self):
        edges = ("1", "g", "tau", "g", "tau", "tau")
        assert tetrahedron_label(edges, ("b_g1", "b_tau", "c_0", "c_1")) == "C_g1tau"
        assert tetrahedron_label(edges, ("b_g0", "b_tau", "c_1", "c_1")) == "C_g2tau"
        assert tetrahedron_label(edges, ("b_g0", "b_tau", "c_1", "c_0")) is None
        tau_triangle = ("1",) * 3 + ("tau",) * 3
        assert tetrahedron_label(tau_triangle, ("a-", "b_tau", "b_tau", "b_tau")) is None

    def test_tau_square(self):
        """Test the two tau-squares with g inner edges."""
        one_g = ("1", "tau", "tau", "tau", "tau", "g")
        assert tetrahedron_label(one_g, ("b_tau", "b_tau", "c_1", "c_1")) == "B_g1tau"
        assert tetrahedron_label(one_g, ("b_tau", "b_tau", "c_1", "c_0")) is None
        two_g = ("g", "tau", "tau", "tau", "tau", "g")
        assert tetrahedron_label(two_g, ("c_0", "c_1", "c_1", "c_0")) == "D_gtau"
        assert tetrahedron_label(two_g, ("c_0", "c_0", "c_1", "c_1")) is None

    def test_inadmissible_face(self):
        assert tetrahedron_label(self.ONES, ("b_tau", "a+", "a+", "a+")) is None


class TestCompletionErrors:
    """Tests for rejected completions."""

    @pytest.fixture
    def ising_text(self):
        return (Settings.DATA_DIR / "ising3.cat").read_text(encoding="utf-8")

    def test_unknown_rule(self):
        with pytest.raises(DatasetError, match="unknown completion"):
            parse_dataset(HEADER + "complete fibonacci\nfrow t j j j p p p 2\n")

    def test_wrong_dimension(self):
        with pytest.raises(DatasetError, match="needs n = 3"):
            parse_dataset(HEADER + "complete ising\nfrow t j j j p p p 2\n")

    def test_direct_call(self):
        with pytest.raises(DatasetError, match="unknown completion"):
            complete_rows("none", [], 3)

    def test_row_breaking_the_rules(self, ising_text):
        """Test that a listed row with an odd tetrahedron is named."""
        text = ising_text.replace(
            "frow 0^0        pt pt pt pt pt 1 1 1 1 1 1 1 1 1 1 a+",
            "frow 0^0        pt pt pt pt pt 1 1 1 1 1 1 1 1 1 1 a-",
        )
        with pytest.raises(DatasetError) as exc_info:
            parse_dataset(text)
        assert exc_info.value.row_id == "0^0"

    def test_family_values_must_agree(self, ising_text):
        text = ising_text.replace("a- a- A_4 A_4 A_4 A_4 A_4  1", "a- a- A_4 A_4 A_4 A_4 A_4  2")
        with pytest.raises(DatasetError, match="family 0 have different values"):
            parse_dataset(text)


class TestAdmissible:
    """Tests for admissible top labels."""

    def test_vertices_and_edges(self, ising):
        """Test the single vertex label and the three edge labels."""
        assert ising.admissible_tops(0, ()) == ("pt",)
        assert ising.admissible_tops(1, ("pt", "pt")) == ("1", "tau", "g")

    def test_triangles(self, ising):
        """Test triangle labels over a few edge patterns."""
        pts = ("pt", "pt", "pt")
        assert ising.admissible_tops(2, pts + ("1", "1", "1")) == ("a+", "a-")
        assert ising.admissible_tops(2, pts + ("1", "tau", "tau")) == ("b_tau",)
        assert ising.admissible_tops(2, pts + ("tau", "tau", "tau")) == ()

    def test_admissible_returns_labels(self, ising):
        """Test that admissible wraps admissible_tops in Label objects."""
        partial = OrderedLabeledSimplex.from_key(2, ("pt",) * 3 + ("1", "g", "g"))
        names = [label.name for label in ising.admissible(partial)]
        assert names == ["b_g0", "b_g1"]
        assert all(label.dim == 2 for label in ising.admissible(partial))

    def test_admissible_above_n_raises(self, semisimple):
        """Test that asking for labels above dimension n raises ContractError."""
        with pytest.raises(ContractError):
            semisimple.admissible(OrderedLabeledSimplex.from_key(2, TOY_KEY))

    def test_semisimple_blocks_do_not_mix(self, semisimple):
        """Test that an edge between different blocks has no label."""
        assert semisimple.admissible_tops(0, ()) == ("j0", "j1")
        assert semisimple.admissible_tops(1, ("j1", "j1")) == ("p1",)
        assert semisimple.admissible_tops(1, ("j0", "j1")) == ()


class TestLabeledSimplex:
    """Tests for OrderedLabeledSimplex."""

    @pytest.fixture
    def triangle(self):
        return OrderedLabeledSimplex(2, ["a", "b", "c", "ab", "ac", "bc", "T"])

    def test_face_label_and_restrict(self, triangle):
        """Test face lookup in any vertex order and restriction."""
        assert triangle.face_label((2, 0)) == "ac"
        assert triangle.top == "T"
        assert triangle.restrict((0, 2)) == OrderedLabeledSimplex(1, ["a", "c", "ac"])
        with pytest.raises(ContractError):
            triangle.face_label((0, 3))

    def test_permuted(self, triangle):
        """Test relabeling by a transposition, with and without a mirror."""
        swapped = triangle.permuted((1, 0, 2))
        assert swapped.labels == ("b", "a", "c", "ab", "bc", "ac", "T")
        mirrored = triangle.permuted((1, 0, 2), mirror=lambda k, name: name + "'")
        assert mirrored.labels == ("b", "a", "c", "ab'", "bc", "ac", "T'")

    def test_permuted_rejects_non_permutation(self, triangle):
        with pytest.raises(ContractError):
            triangle.permuted((0, 0, 1))

    def test_construction_errors(self):
        """Test wrong label counts and a missing lower face label."""
        with pytest.raises(ContractError):
            OrderedLabeledSimplex(1, ["a", "b"])
        with pytest.raises(ContractError):
            OrderedLabeledSimplex(1, ["a", None, "e"])

    def test_from_key_leaves_top_open(self):
        s = OrderedLabeledSimplex.from_key(1, ["a", "b"])
        assert s.top is None
        assert s.key() == ("a", "b")

    def test_consistency_errors(self, triangle):
        """Test that unknown labels are reported per face."""
        known = {0: ["a", "b", "c"], 1: ["ab", "ac"], 2: ["T"]}
        errors = triangle.consistency_errors(known)
        assert len(errors) == 1
        assert "'bc'" in errors[0]


class TestSymmetryActions:
    """Tests for the candidate symmetry actions."""

    def test_mirrors(self):
        assert SymmetryAction.IDENTITY.mirror == {}
        assert SymmetryAction.SWAP_BG.mirror == {"b_g0": "b_g1", "b_g1": "b_g0"}
        assert SymmetryAction.SWAP_BG_C.mirror["c_0"] == "c_1"

    def test_identity_permutation_fixes_keys(self, ising):
        row = ising.row("3_g1tau")
        for action in SymmetryAction:
            assert permuted_key(row.labels, 3, (0, 1, 2, 3, 4), action) == row.labels

    def test_odd_permutation_mirrors_triangles(self, ising):
        """Test that swap_bg mirrors the triangles an odd permutation reverses."""
        row = ising.row("1^0_g0")
        plain = permuted_key(row.labels, 3, (1, 0, 2, 3, 4), SymmetryAction.IDENTITY)
        swapped = permuted_key(row.labels, 3, (1, 0, 2, 3, 4), SymmetryAction.SWAP_BG)
        # only the triangle on vertices 0, 1 and 4 changes orientation
        assert plain.count("b_g1") == 0
        assert swapped.count("b_g1") == 1
        assert swapped.count("b_g0") == plain.count("b_g0") - 1

    def test_with_symmetry(self, ising):
        data = ising.with_symmetry(SymmetryAction.SWAP_C)
        assert data.symmetry is SymmetryAction.SWAP_C
        assert ising.symmetry is SymmetryAction.IDENTITY


class TestParseDataset:
    """Tests for the dataset text format."""

    def test_parse_toy(self, toy_dataset):
        """Test a minimal one-block dataset."""
        assert toy_dataset.n == 1
        assert toy_dataset.source == "toy"
        assert toy_dataset.fsymbol(TOY_KEY) == 2
        assert toy_dataset.weight("j") == 2
        assert toy_dataset.weight("p") == Fraction(1, 2)
        assert toy_dataset.row("t").surface == "sphere"

    def test_symmetry_override(self, toy_dataset_text):
        data = parse_dataset(toy_dataset_text, symmetry=SymmetryAction.SWAP_C)
        assert data.symmetry is SymmetryAction.SWAP_C

    def test_text_round_trip(self, ising):
        """Test that serializing and reparsing gives the same table."""
        again = parse_dataset(ising.to_text(), source="again")
        assert dict(again.fsymbols) == dict(ising.fsymbols)
        assert again.row("2^+_tau").ftilde == SQRT2

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("labels 0 j\n", "missing 'n'"),
            ("n 1\nbogus 3\n", "unknown directive"),
            ("frow t j j j p p p 1\n", "frow before"),
            ("n x\n", "expected 'n <integer>'"),
            ("n 1\nsymmetry sideways\n", "unknown symmetry"),
            ("n 1\ntrace q 1\n", "undeclared label"),
        ],
    )
    def test_malformed_lines(self, text, fragment):
        """Test that malformed input raises DatasetError naming the problem."""
        with pytest.raises(DatasetError, match=fragment):
            parse_dataset(text)

    def test_unknown_label_names_row(self):
        """Test that a row using an undeclared label is reported by row id."""
        with pytest.raises(DatasetError) as exc_info:
            parse_dataset(HEADER + "frow t j j j p p q 1\n")
        assert exc_info.value.row_id == "t"
        assert "row t" in str(exc_info.value)

    def test_bad_value_names_row(self):
        with pytest.raises(DatasetError) as exc_info:
            parse_dataset(HEADER + "frow t j j j p p p 1//2\n")
        assert exc_info.value.row_id == "t"

    def test_missing_trace(self):
        with pytest.raises(DatasetError, match="No trace"):
            parse_dataset("n 1\nlabels 0 j\nlabels 1 p\ngdim j 1\ntrace p 1\ngdim p 1\n")

    def test_duplicate_row_ids(self):
        with pytest.raises(DatasetError, match="Duplicate row ids"):
            parse_dataset(HEADER + "frow t j j j p p p 2\nfrow t j j j p p p 2\n")

    def test_metadata_for_unknown_row(self):
        with pytest.raises(DatasetError):
            parse_dataset(HEADER + "frow t j j j p p p 2\nftilde u 1\n")

    def test_conflicting_rows(self):
        """Test that two rows closing onto one key with different values are recorded."""
        data = parse_dataset(HEADER + "frow t j j j p p p 2\nfrow u j j j p p p 3\n")
        conflict = data.conflicts[0]
        assert (conflict.first_row, conflict.second_row) == ("t", "u")
        assert data.fsymbol(TOY_KEY) == 2
        report = validate(data)
        assert not report.ok
        assert any("rows t and u" in v for v in report.violations)


class TestDerivedDatasets:
    """Tests for copies with edited values."""

    def test_with_fvalue(self, toy_dataset):
        edited = toy_dataset.with_fvalue("t", AlgNum(5))
        assert edited.fsymbol(TOY_KEY) == 5
        assert toy_dataset.fsymbol(TOY_KEY) == 2
        assert "[t edited]" in edited.source

    def test_with_fvalue_unknown_row(self, toy_dataset):
        with pytest.raises(LabelLookupError):
            toy_dataset.with_fvalue("missing", ONE)

    def test_zero_global_dimension(self, toy_dataset):
        """Test that a zero global dimension is rejected by weight and by validate."""
        edited = toy_dataset.with_globaldim("j", ZERO)
        with pytest.raises(ContractError):
            edited.weight("j")
        assert any("zero global dimension" in v for v in validate(edited).violations)

    def test_with_trace(self, toy_dataset):
        assert toy_dataset.with_trace("p", AlgNum(3)).weight("p") == Fraction(3, 2)


class TestLookupErrors:
    """Tests for label lookups."""

    def test_unknown_label(self, ising):
        with pytest.raises(LabelLookupError):
            ising.label("nope")
        with pytest.raises(KeyError):
            ising.trace("nope")

    def test_label_with_dimension(self, ising):
        assert ising.label("tau").dim == 1
        assert ising.label("a+", 2).name == "a+"
        with pytest.raises(LabelLookupError):
            ising.label("a+", 1)

    def test_unknown_row(self, ising):
        with pytest.raises(LabelLookupError, match="No table row"):
            ising.row("9^9")


class TestValidateSemisimple:
    """Tests for validate on the 1+1 data."""

    def test_semisimple_is_valid(self, semisimple):
        assert validate(semisimple).ok

    @pytest.mark.parametrize("dims", [[], [0], [1, -2]])
    def test_bad_block_dimensions(self, dims):
        with pytest.raises(ContractError):
            load_semisimple1(dims)

    def test_unused_label_reported(self):
        """Test that a declared but unused label is a violation."""
        text = HEADER.replace("labels 1 p", "labels 1 p q") + "trace q 1\ngdim q 1\n"
        data = parse_dataset(text + "frow t j j j p p p 2\n")
        assert any("q is never used" in v for v in validate(data).violations)
