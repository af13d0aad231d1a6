import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import centersolve as cs
from centersolve import (
    DegreeError,
    LinearForm,
    NAryForm,
    PowerSumDecomposition,
    expand,
    from_plain_coeffs,
    hessian,
)
from conftest import TERNARY_CUBIC_DEC, TERNARY_CUBIC_TERMS, rand_fraction


class TestFromPlainCoeffs:
    def test_quintic(self):
        eq = from_plain_coeffs([31, 235, 710, 1070, 805, 242])
        assert eq.degree == 5
        assert eq.norm == (31, 47, 71, 107, 161, 242)

    def test_zero_padding(self):
        eq = from_plain_coeffs([1, 0, 0])
        assert eq.degree == 2
        assert eq.norm == (1, 0, 0)

    def test_cube_of_binomial(self):
        eq = from_plain_coeffs([2, 6, 6, 2])  # 2(x+1)^3
        assert eq.norm == (2, 2, 2, 2)

    def test_leading_zero_rejected(self):
        with pytest.raises(DegreeError):
            from_plain_coeffs([0, 1, 2])

    def test_empty_rejected(self):
        with pytest.raises(DegreeError):
            from_plain_coeffs([])


coeff_lists = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=6),
    min_size=2,
    max_size=10,
).filter(lambda c: c[0] != 0)


@given(coeffs=coeff_lists)
def test_convention_round_trip(coeffs):
    eq = from_plain_coeffs(coeffs)
    assert list(eq.plain) == coeffs
    assert cs.from_norm_coeffs(eq.norm).plain == eq.plain


class TestExpand:
    def test_ternary_cubic(self):
        f = expand(TERNARY_CUBIC_DEC, 3)
        assert f.terms == TERNARY_CUBIC_TERMS

    def test_single_power(self):
        dec = PowerSumDecomposition(((F(1), LinearForm((F(1), F(0)))),), 4)
        f = expand(dec, 2)
        assert f.terms == {(4, 0): F(1)}

    def test_two_cubes(self):
        dec = PowerSumDecomposition(
            (
                (F(1), LinearForm((F(1), F(1)))),
                (F(1), LinearForm((F(1), F(-1)))),
            ),
            3,
        )
        f = expand(dec, 2)
        assert f.terms == {(3, 0): F(2), (1, 2): F(6)}

    def test_wrong_variable_count(self):
        with pytest.raises(ValueError):
            expand(TERNARY_CUBIC_DEC, 2)


class TestEvaluate:
    def test_quintic_at_minus_two(self, quintic):
        value = quintic.evaluate(-2)
        scale = max(abs(b) for b in quintic.plain)
        assert abs(value) / scale < 1e-12

    def test_cube_at_zero(self):
        eq = from_plain_coeffs([1, 0, 0, 0])
        assert abs(eq.evaluate(0)) == 0

    def test_sum_of_cubes_at_minus_half(self):
        # 2x^3+3x^2+3x+1 = x^3 + (x+1)^3 vanishes at -1/2
        eq = from_plain_coeffs([2, 3, 3, 1])
        assert abs(eq.evaluate(F(-1, 2))) < 1e-18
        assert eq.evaluate_exact(F(-1, 2)) == 0

    def test_agrees_with_naive_power_sum(self):
        rng = random.Random(20260809)
        for _ in range(50):
            coeffs = [rand_fraction(rng) for _ in range(rng.randint(2, 9))]
            if coeffs[0] == 0:
                coeffs[0] = F(1)
            eq = from_plain_coeffs(coeffs)
            x = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
            naive = sum(
                complex(b) * x ** (eq.degree - i) for i, b in enumerate(coeffs)
            )
            got = complex(eq.evaluate(x))
            assert abs(got - naive) <= 1e-12 * max(1.0, abs(naive))


class TestHessian:
    def test_sum_of_powers_is_diagonal(self):
        f = NAryForm(2, 3, {(3, 0): F(1), (0, 3): F(1)})
        h = hessian(f)
        assert h[0][0].terms == {(1, 0): F(6)}
        assert h[1][1].terms == {(0, 1): F(6)}
        assert h[0][1].terms == {}

    def test_quadratic_cross(self):
        f = NAryForm(2, 2, {(1, 1): F(1)})
        h = hessian(f)
        assert h[0][0].terms == {}
        assert h[0][1].terms == {(0, 0): F(1)}
        assert h[1][0].terms == {(0, 0): F(1)}

    def test_binary_cubic(self):
        # x^3 + 3x^2 y
        f = NAryForm(2, 3, {(3, 0): F(1), (2, 1): F(3)})
        h = hessian(f)
        assert h[0][0].terms == {(1, 0): F(6), (0, 1): F(6)}
        assert h[0][1].terms == {(1, 0): F(6)}
        assert h[1][1].terms == {}

    def test_degree_error(self):
        with pytest.raises(DegreeError):
            hessian(NAryForm(2, 1, {(1, 0): F(1)}))

    def test_symmetry_and_degree(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 4)
            d = rng.randint(3, 5)
            terms = {}
            for _ in range(rng.randint(1, 8)):
                mono = [0] * n
                for _ in range(d):
                    mono[rng.randrange(n)] += 1
                terms[tuple(mono)] = rand_fraction(rng)
            f = NAryForm(n, d, terms)
            h = hessian(f)
            for i in range(n):
                for j in range(n):
                    assert h[i][j] == h[j][i]
                    assert h[i][j].degree == d - 2


class TestNAryForm:
    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            NAryForm(2, 3, {(3, 0): F(1), (1, 0): F(1)})

    def test_drops_zero_coefficients(self):
        f = NAryForm(2, 3, {(3, 0): F(1), (0, 3): F(0)})
        assert (0, 3) not in f.terms

    def test_substitute_linear_identity(self, ternary_cubic):
        p = [[F(i == j) for j in range(3)] for i in range(3)]
        assert ternary_cubic.substitute_linear(p) == ternary_cubic


class TestHomogenization:
    def test_round_trip(self, quintic):
        assert quintic.homogenize().dehomogenize() == quintic

    def test_binary_reversal(self):
        form = cs.BinaryForm((1, 2, 3, 4))
        assert form.reversed().norm == (4, 3, 2, 1)
