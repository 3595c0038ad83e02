import math
import random
from fractions import Fraction

import numpy as np
import pytest

import orbitadm as oa
from orbitadm import geometry

from conftest import (CORPUS_NAMES, ORACLES, load_problem, make_abelian,
                      make_axb, make_h3, moment_float, random_dyadic,
                      random_dyadic_vector, random_vector)


class TestExpm:
    def test_zero_matrix(self):
        assert np.allclose(geometry.expm(np.zeros((3, 3))), np.eye(3),
                           atol=1e-15)

    def test_diagonal(self):
        got = geometry.expm(np.diag([1.0, -2.0]))
        assert np.allclose(np.diag(got), [math.e, math.exp(-2)], rtol=1e-14)

    def test_nilpotent_truncates_exactly(self):
        N = np.array([[0.0, 5.0], [0.0, 0.0]])
        got = geometry.expm(N)
        assert np.allclose(got, [[1, 5], [0, 1]], atol=1e-14)

    def test_inverse_is_negative_exponent(self):
        rng = np.random.default_rng(8)
        A = rng.normal(size=(4, 4))
        prod = geometry.expm(A) @ geometry.expm(-A)
        assert np.allclose(prod, np.eye(4), atol=1e-12)

    def test_scaling_path_matches_series(self):
        # norm > 1/2 forces squaring; compare against the additive identity
        # exp(A) = exp(A/2) @ exp(A/2)
        A = np.array([[0.0, 3.0], [-1.0, 0.5]])
        half = geometry.expm(A / 2)
        assert np.allclose(geometry.expm(A), half @ half, atol=1e-12)


class TestAdExp:
    def test_h3_unipotent(self, h3):
        got = geometry.ad_exp(h3, h3.vector(X=1), 2.0)
        # exp(2 ad X): Y-column becomes Y + 2Z
        expect = np.eye(3)
        expect[2, 1] = 2.0
        assert np.allclose(got, expect, atol=1e-14)

    def test_axb_scales_x(self, axb):
        got = geometry.ad_exp(axb, axb.vector(A=1), 1.0)
        assert abs(got[1, 1] - math.e) < 1e-13
        assert abs(got[0, 0] - 1.0) < 1e-15

    def test_zero_time(self, h3):
        assert np.allclose(geometry.ad_exp(h3, h3.vector(Y=1), 0.0),
                           np.eye(3), atol=1e-16)

    def test_derivative_at_zero_first_order_decay(self):
        # ((exp(h ad u) - I)/h - ad u) has leading term (h/2)(ad u)^2, so
        # shrinking h tenfold shrinks the error about tenfold.
        cases = []
        for L in (make_axb(), load_problem("diag_2d").algebra,
                  load_problem("grelaud").algebra):
            cases.append((L, L.vector(A=1)))
        for L, u in cases:
            ad = np.array([[float(x) for x in row]
                           for row in oa.ad_matrix(L, u)])
            assert np.abs(ad @ ad).max() > 0  # second-order term present
            errs = []
            for h in (1e-3, 1e-4):
                diff = (geometry.ad_exp(L, u, h) - np.eye(L.dim)) / h
                errs.append(np.abs(diff - ad).max())
            ratio = errs[0] / errs[1]
            assert 8 <= ratio <= 12

    def test_derivative_exact_for_square_zero(self, h3):
        # (ad X)^2 = 0 in h3: the series stops and the quotient is exact
        ad = np.array([[float(x) for x in row]
                       for row in oa.ad_matrix(h3, h3.vector(X=1))])
        diff = (geometry.ad_exp(h3, h3.vector(X=1), 1e-3) - np.eye(3)) / 1e-3
        assert np.abs(diff - ad).max() < 1e-12


class TestCoadjointApply:
    def test_axb_closed_form(self, axb):
        out = oa.coadjoint_apply(axb, (1.0, 0.0), (0.0, 1.0))
        assert abs(out[0]) < 1e-15
        assert abs(out[1] - math.exp(-1)) < 1e-14

    def test_h3_translation(self, h3):
        out = oa.coadjoint_apply(h3, (2.0, 0.0, 0.0), (0.0, 0.0, 1.0))
        assert np.allclose(out, [0.0, -2.0, 1.0], atol=1e-13)

    def test_identity_fixes_everything(self, h3):
        rng = random.Random(60)
        for _ in range(10):
            l = [float(random_dyadic(rng)) for _ in range(3)]
            out = oa.coadjoint_apply(h3, (0.0, 0.0, 0.0), l)
            assert np.allclose(out, l, atol=0)

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_group_law_inverse(self, name, corpus_data):
        L = corpus_data[name].algebra
        rng = random.Random(500 + len(name) * 7)
        for _ in range(100 // len(CORPUS_NAMES) + 2):
            t = [float(random_dyadic(rng, scale=16, span=16))
                 for _ in range(L.dim)]
            l = [float(random_dyadic(rng)) for _ in range(L.dim)]
            factors = [(L.basis_vector(k), t[k]) for k in range(L.dim)]
            inverse_factors = [(Z, -tk) for Z, tk in reversed(factors)]
            there = geometry.coadjoint_apply_factors(L, factors, l)
            back = geometry.coadjoint_apply_factors(L, inverse_factors, there)
            assert np.abs(back - np.array(l)).max() < 1e-9


class TestPhiInChart:
    def test_zero_time_reproduces_chart(self, corpus_data):
        rng = random.Random(2)
        for D in corpus_data.values():
            x = [float(random_dyadic(rng)) for _ in range(D.n - D.m)]
            out = oa.phi_in_chart(D, [0.0] * D.n, x)
            expect = [float(v) for v in D.functional.f_vals] + x
            assert np.abs(out - np.array(expect)).max() < 1e-12

    def test_axb_first_coordinate_decays(self, axb):
        D = oa.build_datum(axb, [axb.vector(X=1)], [1])
        # adapted order (X, A); t = (0, 1) is s = exp(A)
        out = oa.phi_in_chart(D, (0.0, 1.0), (0.0,))
        assert abs(out[0] - math.exp(-1)) < 1e-13

    def test_h3_moves_f_value_linearly(self, h3):
        D = oa.build_datum(h3, [h3.vector(Y=1), h3.vector(Z=1)], [0, 1])
        # adapted order (Y, Z, X); t = (0, 0, 2) is s = exp(2X)
        out = oa.phi_in_chart(D, (0.0, 0.0, 2.0), (0.0,))
        assert abs(out[0] - (-2.0)) < 1e-13   # value on Y
        assert abs(out[1] - 1.0) < 1e-13      # value on Z (central: fixed)

    def test_arity_checks(self, h3):
        D = oa.build_datum(h3, [h3.vector(X=1)], [0])
        with pytest.raises(oa.DimensionMismatchError):
            oa.phi_in_chart(D, (0.0, 0.0), (0.0, 0.0))
        with pytest.raises(oa.DimensionMismatchError):
            oa.phi_in_chart(D, (0.0, 0.0, 0.0), (0.0,))


class TestNumericalRank:
    def test_threshold_forces_rank_one(self):
        assert oa.numerical_rank(np.diag([1.0, 1e-15]), 1e-8) == 1

    def test_identity(self):
        assert oa.numerical_rank(np.eye(4), 1e-8) == 4

    def test_zero_matrix(self):
        assert oa.numerical_rank(np.zeros((3, 5)), 1e-8) == 0

    def test_empty(self):
        assert oa.numerical_rank(np.zeros((0, 4)), 1e-8) == 0

    def test_matches_exact_rank_on_rational_matrices(self):
        rng = random.Random(321)
        for _ in range(30):
            rows = [random_vector(rng, 5, num_bound=9, den_bound=4)
                    for _ in range(3)]
            # duplicate a row and add a combination: rank <= 3 known exactly
            mat = rows + [rows[0], tuple(a + b for a, b in
                                         zip(rows[1], rows[2]))]
            exact = oa.rank_exact(mat)
            floats = np.array([[float(x) for x in r] for r in mat])
            assert oa.numerical_rank(floats, 1e-8) == exact

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            oa.numerical_rank(np.eye(2), 0.0)


class TestFdJacobian:
    def test_axb_top_left_matches_constant_row(self, axb):
        D = oa.build_datum(axb, [axb.vector(X=1)], [1])
        jr = oa.fd_jacobian(D, (0.0,), h=1e-4)
        assert np.allclose(jr.J[0, :2], [0.0, -1.0], atol=1e-6)
        assert jr.max_dev_topleft < 1e-6
        assert jr.numerical_rank_J == jr.expected_rank == 2

    def test_h3_rank_formula(self, h3):
        D = oa.build_datum(h3, [h3.vector(Y=1), h3.vector(Z=1)], [0, 1])
        jr = oa.fd_jacobian(D, (0.5,), h=1e-4)
        assert jr.expected_rank == 1 + (3 - 2)
        assert jr.numerical_rank_J == 2

    def test_abelian_zero_top_block(self):
        L = make_abelian(3)
        D = oa.build_datum(L, [L.vector(E1=1)], [2])
        jr = oa.fd_jacobian(D, (0.25, -0.75), h=1e-4)
        assert np.abs(jr.J[:1, :]).max() == 0.0
        assert jr.numerical_rank_J == jr.expected_rank == 2

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_block_structure_on_corpus(self, name, corpus_data):
        D = corpus_data[name]
        rng = random.Random(10_000 + len(name))
        for _ in range(5):
            x = random_dyadic_vector(rng, D.n - D.m)
            jr = oa.fd_jacobian(D, x, h=1e-4)
            assert jr.max_dev_topleft < 1e-6
            assert jr.max_dev_topright < 1e-6
            assert jr.max_dev_bottomright < 1e-9
            assert jr.numerical_rank_J == jr.expected_rank

    @pytest.mark.parametrize("name",
                             [n for n in CORPUS_NAMES
                              if ORACLES[n][0] == ORACLES[n][1]])
    def test_submersion_at_free_witness(self, name, corpus_data):
        D = corpus_data[name]
        res = oa.symbolic_generic_rank(D)
        jr = oa.fd_jacobian(D, res.witness, h=1e-4)
        assert jr.numerical_rank_J == D.n

    @pytest.mark.parametrize("name",
                             [n for n in CORPUS_NAMES
                              if ORACLES[n][0] < ORACLES[n][1]])
    def test_never_submersive_when_not_free(self, name, corpus_data):
        D = corpus_data[name]
        rng = random.Random(31_337 + len(name))
        for _ in range(100):
            x = random_dyadic_vector(rng, D.n - D.m)
            jr = oa.fd_jacobian(D, x, h=1e-4)
            assert jr.numerical_rank_J < D.n


class TestTransportedStabilizers:
    """dim h(s.l) = dim h(l) for s in H, computed through float transport."""

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_h_equivariant_stabilizer_dimension(self, name, corpus_data):
        D = corpus_data[name]
        L = D.algebra
        rng = random.Random(64_000 + len(name) * 3)
        for _ in range(20):
            x = random_dyadic_vector(rng, D.n - D.m)
            l_exact = oa.point_on_variety(D, x)
            exact_rank = oa.moment_matrix(D, l_exact).rank()
            l_float = [float(v) for v in l_exact]
            factors = [(D.subalgebra.rows[i], float(random_dyadic(rng)))
                       for i in range(D.m)]
            moved = geometry.coadjoint_apply_factors(L, factors, l_float)
            got = oa.numerical_rank(moment_float(D, moved), 1e-8)
            assert got == exact_rank
