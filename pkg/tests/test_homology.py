from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from homex.complex_core import SimplicialComplex, cone, f_vector, from_facets, full_simplex, simplex_boundary
from homex.constructions import build_mh, ms_labeled
from homex.corpus import projective_plane, torus
from homex.errors import PreconditionError
from homex.homology import (
    IntegerMatrix,
    boundary_matrix,
    euler_characteristic,
    format_group,
    homology_in_degree,
    homology_profile,
    is_homology_nontrivial,
    mv_corollary_check,
    smith_normal_form,
)

from test_complex_core import mixed_complexes


def sympy_factors(dense):
    if not dense or not dense[0]:
        return ()
    return tuple(abs(int(x)) for x in invariant_factors(Matrix(dense), domain=ZZ) if x != 0)


def rational_rank(dense):
    rows = [[Fraction(x) for x in r] for r in dense]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form(IntegerMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).diagonal == (1, 1, 1)

    def test_two_by_two(self):
        res = smith_normal_form(IntegerMatrix.from_dense([[2, 4], [6, 8]]))
        assert res.diagonal == (2, 4) == sympy_factors([[2, 4], [6, 8]])
        assert res.rank == 2 and res.torsion == (2, 4)

    def test_triangle_boundary(self):
        M = boundary_matrix(simplex_boundary(2), 1)
        assert smith_normal_form(M).diagonal == (1, 1)

    def test_zero_and_empty(self):
        assert smith_normal_form(IntegerMatrix(3, 2, {})).diagonal == ()
        assert smith_normal_form(IntegerMatrix(0, 0, {})).diagonal == ()

    def test_large_entries_stay_exact(self):
        big = 10**30
        dense = [[big, big + 1], [big - 1, big]]
        assert smith_normal_form(IntegerMatrix.from_dense(dense)).diagonal == sympy_factors(dense)

    @settings(max_examples=200, deadline=None)
    @given(matrices)
    def test_matches_sympy(self, dense):
        assert smith_normal_form(IntegerMatrix.from_dense(dense)).diagonal == sympy_factors(dense)

    @given(matrices, st.randoms())
    def test_divisibility_and_permutation_stability(self, dense, rnd):
        diag = smith_normal_form(IntegerMatrix.from_dense(dense)).diagonal
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
        assert all(x > 0 for x in diag)
        rows = dense[:]
        rnd.shuffle(rows)
        perm = list(range(len(dense[0])))
        rnd.shuffle(perm)
        shuffled = [[r[j] for j in perm] for r in rows]
        assert smith_normal_form(IntegerMatrix.from_dense(shuffled)).diagonal == diag


class TestIntegerMatrix:
    def test_drops_zero_entries(self):
        M = IntegerMatrix.from_dense([[0, 1], [0, 0]])
        assert M.entries == {(0, 1): 1}

    def test_out_of_range_rejected(self):
        with pytest.raises(Exception):
            IntegerMatrix(1, 1, {(1, 0): 1})

    def test_matmul_and_transpose(self):
        A = IntegerMatrix.from_dense([[1, 2, 3]])
        B = IntegerMatrix.from_dense([[1], [0], [-1]])
        assert (A @ B).to_dense() == [[-2]]
        assert (B @ A).to_dense() == [[1, 2, 3], [0, 0, 0], [-1, -2, -3]]
        assert A.transpose().to_dense() == [[1], [2], [3]]


class TestBoundaryMatrix:
    def test_triangle_boundary_columns(self):
        M = boundary_matrix(simplex_boundary(2), 1).to_dense()
        assert len(M) == 3 and len(M[0]) == 3
        for col in zip(*M):
            assert sorted(col) == [-1, 0, 1]

    def test_rank_of_tetrahedron_boundary(self):
        M = boundary_matrix(simplex_boundary(3), 2)
        assert (M.rows, M.cols) == (6, 4)
        assert rational_rank(M.to_dense()) == 3
        assert smith_normal_form(M).rank == 3

    def test_sign_convention(self):
        M = boundary_matrix(full_simplex([0, 1, 2]), 2).to_dense()
        # rows: 01, 02, 12
        assert [r[0] for r in M] == [1, -1, 1]

    def test_augmentation(self):
        M = boundary_matrix(simplex_boundary(2), 0, reduced=True)
        assert M.to_dense() == [[1, 1, 1]]
        assert boundary_matrix(simplex_boundary(2), 0).rows == 0

    def test_square_is_zero_on_simplex(self):
        X = full_simplex([0, 1, 2])
        assert (boundary_matrix(X, 1) @ boundary_matrix(X, 2)).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(mixed_complexes())
    def test_square_is_zero(self, X):
        for i in range(1, X.dim):
            assert (boundary_matrix(X, i) @ boundary_matrix(X, i + 1)).is_zero()
        if X.dim >= 1:
            assert (boundary_matrix(X, 0, reduced=True) @ boundary_matrix(X, 1)).is_zero()


class TestProfiles:
    def test_sphere(self):
        H = homology_profile(simplex_boundary(3))
        assert H.betti == (1, 0, 1) and H.torsion == ((), (), ())

    def test_projective_plane(self):
        H = homology_profile(projective_plane())
        assert H.betti == (1, 0, 0)
        assert H.torsion[1] == (2,)
        assert sympy_factors(boundary_matrix(projective_plane(), 2).to_dense()).count(2) == 1
        assert H.describe(1) == "Z/2"

    def test_torus(self):
        H = homology_profile(torus())
        assert H.betti == (1, 2, 1) and H.torsion == ((), (), ())

    def test_mh_2_1(self):
        H = homology_profile(build_mh(2, 1), reduced=True)
        assert H.betti == (0, 1, 0) and not any(H.torsion)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_boundary_simplex_reduced(self, n):
        H = homology_profile(simplex_boundary(n), reduced=True)
        assert H.betti == tuple(1 if i == n - 1 else 0 for i in range(n))

    def test_empty_complex(self):
        X = SimplicialComplex()
        assert homology_in_degree(X, -1) == (1, ())
        assert homology_profile(X).betti == ()
        assert homology_in_degree(from_facets([[0]]), -1) == (0, ())

    def test_two_points(self):
        assert is_homology_nontrivial(from_facets([[0], [1]]), 0)
        assert not is_homology_nontrivial(from_facets([[0, 1]]), 0)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_spheres_are_nontrivial(self, k):
        assert is_homology_nontrivial(simplex_boundary(k + 1), k)

    def test_ms_3_2(self):
        assert is_homology_nontrivial(ms_labeled(3, 2).complex, 2)

    def test_format_group(self):
        assert format_group(0) == "0"
        assert format_group(1, (2,)) == "Z + Z/2"
        assert format_group(3, (2, 6)) == "Z^3 + Z/2 + Z/6"


@settings(max_examples=80, deadline=None)
@given(mixed_complexes())
def test_betti_matches_rational_rank(X):
    H = homology_profile(X)
    ranks = {i: rational_rank(boundary_matrix(X, i).to_dense()) if boundary_matrix(X, i).rows else 0
             for i in range(X.dim + 2)}
    for i in range(X.dim + 1):
        assert H.betti[i] == len(X.faces(i)) - ranks[i] - ranks.get(i + 1, 0)


@settings(max_examples=80, deadline=None)
@given(mixed_complexes())
def test_euler_poincare(X):
    H = homology_profile(X)
    assert euler_characteristic(X) == sum((-1) ** i * b for i, b in enumerate(H.betti))
    assert euler_characteristic(X) == sum((-1) ** i * c for i, c in enumerate(f_vector(X)))


@settings(max_examples=60, deadline=None)
@given(mixed_complexes(max_n=5))
def test_cone_is_acyclic(X):
    assert homology_profile(cone(X, 9), reduced=True).is_acyclic()


@settings(max_examples=60, deadline=None)
@given(mixed_complexes())
def test_reduced_and_unreduced_differ_only_in_degree_zero(X):
    red, unred = homology_profile(X, reduced=True), homology_profile(X)
    assert red.betti[0] == unred.betti[0] - 1
    assert red.betti[1:] == unred.betti[1:] and red.torsion == unred.torsion


class TestMayerVietoris:
    def test_sphere_split(self):
        X = simplex_boundary(3)
        B = full_simplex(X.facets[-1])
        A = SimplicialComplex(X.facets[:-1])
        assert mv_corollary_check(X, A, B, 2)

    def test_ms_attachment(self):
        built = ms_labeled(2, 1)
        assert mv_corollary_check(built.stages["MS"], built.stages["MS''"], built.stages["attach"], 1)

    def test_nonacyclic_a_rejected(self):
        X = SimplicialComplex([(0, 1), (1, 2), (0, 2), (2, 3)])
        A = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
        with pytest.raises(PreconditionError):
            mv_corollary_check(X, A, full_simplex([2, 3]), 1)

    def test_b_not_a_simplex(self):
        X = simplex_boundary(2)
        with pytest.raises(PreconditionError):
            mv_corollary_check(X, full_simplex([0, 1]), SimplicialComplex([(0, 2), (1, 2)]), 1)

    def test_union_mismatch(self):
        with pytest.raises(PreconditionError):
            mv_corollary_check(simplex_boundary(3), full_simplex([0, 1, 2]), full_simplex([0, 1, 3]), 2)

    def test_circle_from_path_and_edge(self):
        # A∩B is two points
        X = simplex_boundary(2)
        A = SimplicialComplex([(0, 1), (1, 2)])
        assert mv_corollary_check(X, A, full_simplex([0, 2]), 1)
        # n = 2: both sides trivial
        assert mv_corollary_check(X, A, full_simplex([0, 2]), 2)
