import random
from fractions import Fraction as F

import pytest

import centersolve as cs
from centersolve import (
    CenterRankError,
    DegreeError,
    NAryForm,
    PivotError,
    binary_center_system,
    center_generator,
    compute_center,
    hessian,
    is_nondegenerate,
)
from centersolve.linalg import identity, rank, span_equal
from conftest import (
    TERNARY_CENTER_BASIS,
    planted_diagonalizable,
    rand_invertible_matrix,
    rand_nonzero_fraction,
)


def sum_of_powers(n, d):
    return NAryForm(n, d, {tuple(d if i == j else 0 for i in range(n)): F(1) for j in range(n)})


def in_span(basis, matrix):
    vectors = [[x for row in b for x in row] for b in basis.basis]
    flat = [x for row in matrix for x in row]
    return rank(vectors) == rank(vectors + [flat])


def satisfies_center_condition(f, x):
    """Exact re-expansion check that H*X is a symmetric polynomial matrix."""
    n = f.nvars
    h = hessian(f)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = h[i][0].__class__(n, f.degree - 2, {})
            rhs = h[i][0].__class__(n, f.degree - 2, {})
            for k in range(n):
                lhs = lhs + x[k][j] * h[i][k]
                rhs = rhs + x[k][i] * h[j][k]
            if lhs != rhs:
                return False
    return True


class TestComputeCenter:
    @pytest.mark.parametrize("n,d", [(2, 3), (3, 3), (4, 4), (2, 5)])
    def test_sum_of_powers_center_is_diagonal(self, n, d):
        basis = compute_center(sum_of_powers(n, d))
        assert basis.dim == n
        units = [
            [[F(i == t and j == t) for j in range(n)] for i in range(n)]
            for t in range(n)
        ]
        assert span_equal(
            [[x for row in b for x in row] for b in basis.basis],
            [[x for row in u for x in row] for u in units],
        )

    def test_ternary_cubic_matches_general_solution(self, ternary_cubic):
        basis = compute_center(ternary_cubic)
        assert basis.dim == 3
        assert span_equal(
            [[x for row in b for x in row] for b in basis.basis],
            [[x for row in b for x in row] for b in TERNARY_CENTER_BASIS],
        )

    def test_perfect_cube_has_three_dimensional_center(self):
        f = NAryForm(2, 3, {(3, 0): F(1), (2, 1): F(3), (1, 2): F(3), (0, 3): F(1)})
        basis = compute_center(f)  # (x+y)^3
        assert basis.dim == 3
        assert not basis.is_commutative()

    def test_degree_error(self):
        with pytest.raises(DegreeError):
            compute_center(NAryForm(2, 2, {(2, 0): F(1), (0, 2): F(1)}))

    def test_membership_and_identity(self, ternary_cubic):
        basis = compute_center(ternary_cubic)
        assert in_span(basis, identity(3))
        for x in basis.basis:
            assert satisfies_center_condition(ternary_cubic, x)

    def test_commutativity_for_nondegenerate_randoms(self):
        rng = random.Random(101)
        for _ in range(10):
            n = rng.randint(2, 3)
            f, _ = planted_diagonalizable(rng, n, 3)
            if not is_nondegenerate(f):
                continue
            assert compute_center(f).is_commutative()

    def test_conjugation_covariance(self):
        rng = random.Random(202)
        for _ in range(5):
            n = rng.randint(2, 3)
            f, _ = planted_diagonalizable(rng, n, 3)
            basis = compute_center(f)
            p = rand_invertible_matrix(rng, n)
            from centersolve.linalg import inverse, mat_mul

            p_inv = inverse(p)
            g = f.substitute_linear(p)
            conjugated = [
                mat_mul(mat_mul(p_inv, b), p) for b in basis.basis
            ]
            basis_g = compute_center(g)
            assert span_equal(
                [[x for row in b for x in row] for b in basis_g.basis],
                [[x for row in b for x in row] for b in conjugated],
            )


class TestBinaryCenterSystem:
    def test_cubic_rows(self):
        form = cs.BinaryForm((F(1), F(2), F(3), F(4)))
        assert binary_center_system(form) == [
            [F(1), F(2), F(-3)],
            [F(2), F(3), F(-4)],
        ]

    def test_quintic_rank_two(self, quintic):
        system = binary_center_system(quintic.homogenize())
        assert len(system) == 4
        assert rank(system) == 2

    def test_constant_rows_rank_one(self):
        form = cs.BinaryForm((F(2), F(2), F(2), F(2), F(2)))
        assert rank(binary_center_system(form)) == 1


class TestCenterGenerator:
    def test_quintic_invariants(self, quintic):
        gen = center_generator(quintic.homogenize())
        assert (gen.D1, gen.D2, gen.D3) == (-8, -20, -12)
        assert gen.discriminant == 16
        assert (gen.lambda1, gen.lambda2) == (-8, -12)
        assert gen.matrix == ((0, 12), (-8, -20))

    def test_degree7_invariants(self, degree7):
        gen = center_generator(degree7.homogenize())
        assert gen.D1 == F(-25, 1764)
        assert gen.D2 == F(25, 1764)
        assert gen.D3 == F(-25, 7056)
        assert gen.discriminant == 0
        assert gen.lambda1 == gen.lambda2 == F(25, 3528)

    @pytest.mark.parametrize("p,q", [(F(2), F(5)), (F(-3), F(2)), (F(1, 2), F(-1, 3))])
    def test_depressed_cubic_invariants(self, p, q):
        eq = cs.from_plain_coeffs([1, 0, p, q])
        gen = center_generator(eq.homogenize())
        assert gen.D1 == p / 3
        assert gen.D2 == q
        assert gen.D3 == -p * p / 9

    def test_eigenvalue_identities(self):
        rng = random.Random(303)
        for _ in range(25):
            norm = tuple(rand_nonzero_fraction(rng) for _ in range(4))
            form = cs.BinaryForm(norm)
            try:
                gen = center_generator(form)
            except (PivotError, CenterRankError):
                continue
            assert gen.lambda1 + gen.lambda2 == gen.D2
            assert gen.lambda1 * gen.lambda2 == gen.D1 * gen.D3

    def test_pivot_error(self):
        # x^3 + y^3 has D1 = 0
        with pytest.raises(PivotError):
            center_generator(cs.BinaryForm((1, 0, 0, 1)))

    def test_rank_error_on_perfect_power(self):
        with pytest.raises(CenterRankError) as exc:
            center_generator(cs.BinaryForm((1, 1, 1, 1)))
        assert exc.value.rank == 1

    def test_binary_consistency_with_general_center(self, quintic):
        form = quintic.homogenize()
        gen = center_generator(form)
        basis = compute_center(form.to_nary())
        assert basis.dim == 2
        lam = [list(map(F, row)) for row in gen.matrix]
        assert span_equal(
            [[x for row in b for x in row] for b in basis.basis],
            [[x for row in m for x in row] for m in (identity(2), lam)],
        )
