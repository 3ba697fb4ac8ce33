"""Tests for exact arithmetic in Q[2^(1/4)] and exact linear algebra."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exactnum import (
    ONE,
    SQRT2,
    THETA,
    ZERO,
    Accumulator,
    AlgMatrix,
    AlgNum,
    Monomial,
    Sign,
    add,
    algnum_terms,
    brute_force_psd_witness,
    inv,
    is_psd,
    kernel_basis,
    mul,
    multiply_terms,
    neg,
    pair_to_algnum,
    parse,
    pow2_quarter,
    rank,
    render,
    sign,
)
from src.utils.errors import ContractError

pytestmark = pytest.mark.unit

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
algnums = st.builds(AlgNum, fractions, fractions, fractions, fractions)


def _random_algnum(rng: random.Random) -> AlgNum:
    return AlgNum(*(Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(4)))


class TestFieldOperations:
    """Tests for the field structure."""

    def test_theta_squared_squared(self):
        """Test that theta^2 * theta^2 reduces to 2."""
        assert mul(THETA * THETA, THETA * THETA) == AlgNum(2)

    def test_inverse_of_theta(self):
        """Test that inv(theta) is theta^3 / 2."""
        assert inv(THETA) == AlgNum(0, 0, 0, Fraction(1, 2))

    def test_difference_of_squares(self):
        """Test that (1 + theta^2)(1 - theta^2) is -1."""
        assert (ONE + SQRT2) * (ONE - SQRT2) == AlgNum(-1)

    def test_inverse_of_zero_raises(self):
        """Test that inverting zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            inv(ZERO)
        with pytest.raises(ZeroDivisionError):
            ONE / 0

    def test_module_functions_match_operators(self):
        """Test that add, mul and neg agree with the operators."""
        a, b = AlgNum(1, 2, 3, 4), AlgNum(Fraction(1, 3), 0, -1)
        assert add(a, b) == a + b
        assert mul(a, b) == a * b
        assert neg(a) == -a

    def test_coefficients_in_lowest_terms(self):
        """Test that coefficients are stored canonically."""
        a = AlgNum(Fraction(2, 4), Fraction(-3, -6))
        assert a.coefficients[:2] == (Fraction(1, 2), Fraction(1, 2))
        assert a == AlgNum(Fraction(1, 2), Fraction(1, 2))

    def test_comparison_with_rationals(self):
        """Test equality and ordering against plain integers and fractions."""
        assert AlgNum(3) == 3
        assert AlgNum(Fraction(1, 2)) == Fraction(1, 2)
        assert SQRT2 != 1
        assert SQRT2 > 1
        assert SQRT2 < Fraction(3, 2)

    def test_integer_powers(self):
        """Test positive and negative powers."""
        assert THETA**4 == 2
        assert THETA**-4 == Fraction(1, 2)
        assert SQRT2**0 == ONE

    def test_approx_and_decimal_string(self):
        """Test decimal approximations of sqrt2."""
        assert str(SQRT2.approx(20))[:8] == "1.414213"
        assert SQRT2.to_decimal_string(6) == "1.41421"

    @given(algnums, algnums, algnums)
    @settings(max_examples=200, deadline=None)
    def test_field_axioms_property(self, a, b, c):
        """Test commutativity, associativity and distributivity."""
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(algnums)
    @settings(max_examples=200, deadline=None)
    def test_inverse_property(self, a):
        """Test that a * inv(a) is one for nonzero a."""
        if a:
            assert a * a.inv() == ONE

    def test_field_axioms_on_many_random_values(self):
        """Test the axioms and sign multiplicativity on ten thousand random values."""
        rng = random.Random(7)
        for _ in range(10_000):
            a, b = _random_algnum(rng), _random_algnum(rng)
            assert a * b == b * a
            assert (a + b) - b == a
            if a:
                assert a * a.inv() == ONE
            assert sign(a * b) is Sign(sign(a) * sign(b))


class TestPow2Quarter:
    """Tests for pow2_quarter."""

    @pytest.mark.parametrize(
        "k, expected",
        [
            (0, ONE),
            (4, AlgNum(2)),
            (6, AlgNum(0, 0, 2)),
            (-2, AlgNum(0, 0, Fraction(1, 2))),
            (1, THETA),
            (-4, AlgNum(Fraction(1, 2))),
        ],
    )
    def test_values(self, k, expected):
        """Test that pow2_quarter gives 2^(k/4) exactly."""
        assert pow2_quarter(k) == expected

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_exponent_law(self, j, k):
        """Test that exponents add under multiplication."""
        assert pow2_quarter(j) * pow2_quarter(k) == pow2_quarter(j + k)


class TestSign:
    """Tests for exact sign determination."""

    def test_examples(self):
        """Test zero, theta - 1 and 3 - 2 sqrt2."""
        assert sign(ZERO) is Sign.ZERO
        assert sign(THETA - 1) is Sign.POSITIVE
        assert sign(3 - 2 * SQRT2) is Sign.POSITIVE
        assert sign(2 * SQRT2 - 3) is Sign.NEGATIVE

    def test_close_values(self):
        """Test a value extremely close to zero."""
        # 99/70 approximates sqrt2 from above
        assert sign(SQRT2 - Fraction(99, 70)) is Sign.NEGATIVE
        assert sign(SQRT2 - Fraction(140, 99)) is Sign.POSITIVE

    @given(algnums, algnums)
    @settings(max_examples=200, deadline=None)
    def test_sign_is_multiplicative(self, a, b):
        """Test that sign(ab) = sign(a) sign(b)."""
        assert sign(a * b) == sign(a) * sign(b)


class TestGrammar:
    """Tests for rendering and parsing."""

    def test_render(self):
        """Test canonical rendering."""
        assert render(ZERO) == "0"
        assert render(AlgNum(0, 0, Fraction(1, 2))) == "1/2·r2"
        assert render(AlgNum(-3, 0, 2)) == "-3 + 2·r2"
        assert render(AlgNum(1, -1)) == "1 - r"

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1/2·r2", AlgNum(0, 0, Fraction(1, 2))),
            ("sqrt2", SQRT2),
            ("2^(-3/4)", AlgNum(0, Fraction(1, 2))),
            ("-3 + 2*sqrt2", AlgNum(-3, 0, 2)),
            ("r3/2", AlgNum(0, 0, 0, Fraction(1, 2))),
            ("2^3", AlgNum(8)),
            ("2^-1", AlgNum(Fraction(1, 2))),
            ("1 - 2^-2", AlgNum(Fraction(3, 4))),
            ("3·2^-1 + r", AlgNum(Fraction(3, 2), 1)),
        ],
    )
    def test_parse(self, text, expected):
        """Test the accepted shorthands."""
        assert parse(text) == expected

    @pytest.mark.parametrize("text", ["", "1 +", "abc", "(1", "1//2", "2^-"])
    def test_parse_rejects_malformed(self, text):
        """Test that malformed text raises ContractError."""
        with pytest.raises(ContractError):
            parse(text)

    @given(algnums)
    def test_parse_inverts_render(self, a):
        """Test that parsing a rendered value gives it back."""
        assert parse(render(a)) == a


class TestMonomials:
    """Tests for monomials and the accumulator."""

    def test_canonical_form_folds_powers_of_two(self):
        """Test that 4 * 2^(1/4) and 1 * 2^(9/4) are the same monomial."""
        assert Monomial(4, 1) == Monomial(1, 9)
        assert Monomial(Fraction(3, 8), 0).as_pair() == (Fraction(3), -12)

    def test_from_algnum(self):
        """Test conversion from single-term and multi-term values."""
        assert Monomial.from_algnum(AlgNum(0, 0, Fraction(1, 2))) == Monomial(1, -2)
        assert Monomial.from_algnum(AlgNum(1, 1)) is None

    def test_accumulator_sums_exactly(self):
        """Test that accumulated monomials convert to the exact sum."""
        acc = Accumulator()
        acc.add_monomial(Monomial(1, 2))
        acc.add_monomial(Monomial(1, -2))
        acc.add(3, 0)
        assert acc.value() == 3 + SQRT2 + SQRT2 / 2
        assert acc.count == 3

    def test_accumulator_merge(self):
        """Test that merging adds sums and counts."""
        a, b = Accumulator(), Accumulator()
        a.add(1, 4)
        b.add(Fraction(1, 2), 4)
        a.merge(b)
        assert a.value() == 3
        assert a.count == 2
        assert Accumulator().is_empty()

    def test_terms_multiply_like_values(self):
        """Test that algnum_terms and multiply_terms agree with AlgNum products."""
        a, b = AlgNum(1, 0, Fraction(1, 2)), AlgNum(0, 3)
        acc = Accumulator()
        acc.add_terms(multiply_terms(algnum_terms(a), algnum_terms(b)))
        assert acc.value() == a * b

    def test_pair_to_algnum(self):
        """Test conversion of (coeff, quarter) pairs."""
        assert pair_to_algnum(1, -2) == SQRT2 / 2
        assert pair_to_algnum(3, 8) == AlgNum(12)


class TestMatrices:
    """Tests for exact rank, kernel and positive semidefiniteness."""

    def test_identity_rank(self):
        """Test that the identity has full rank and no kernel."""
        eye = AlgMatrix.identity(3)
        assert rank(eye) == 3
        assert kernel_basis(eye) == []

    def test_rank_one_kernel(self):
        """Test the kernel of [[2, sqrt2], [sqrt2, 1]]."""
        m = AlgMatrix.from_rows([[AlgNum(2), SQRT2], [SQRT2, ONE]])
        assert rank(m) == 1
        (v,) = kernel_basis(m)
        assert v[0] * (-SQRT2) == v[1] * ONE
        assert m.mat_vec(v) == [ZERO, ZERO]

    def test_rank_plus_nullity(self):
        """Test rank + kernel size = columns on a rectangular matrix."""
        m = AlgMatrix.from_rows([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]])
        basis = kernel_basis(m)
        assert rank(m) + len(basis) == 4
        for v in basis:
            assert all(x == 0 for x in m.mat_vec(v))

    def test_ragged_rows_rejected(self):
        """Test that rows of different lengths raise ContractError."""
        with pytest.raises(ContractError):
            AlgMatrix.from_rows([[1, 2], [3]])

    def test_is_psd_examples(self):
        """Test the zero matrix and an indefinite matrix."""
        assert is_psd(AlgMatrix.zeros(3, 3))
        assert not is_psd(AlgMatrix.from_rows([[1, 2], [2, 1]]))
        assert is_psd(AlgMatrix.from_rows([[2, SQRT2], [SQRT2, 1]]))

    def test_is_psd_rejects_non_symmetric(self):
        """Test that a non-symmetric matrix raises ContractError."""
        with pytest.raises(ContractError):
            is_psd(AlgMatrix.from_rows([[1, 2], [0, 1]]))

    def test_is_psd_agrees_with_brute_force(self):
        """Test is_psd against small integer witnesses on random symmetric matrices."""
        rng = random.Random(3)
        for _ in range(60):
            entries = [[0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(i, 3):
                    entries[i][j] = entries[j][i] = rng.randint(-3, 3)
            m = AlgMatrix.from_rows(entries)
            witness = brute_force_psd_witness(m)
            if is_psd(m):
                assert witness is None
            if witness is not None:
                assert not is_psd(m)
