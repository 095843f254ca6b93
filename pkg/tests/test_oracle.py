from fractions import Fraction

import pytest

from nakayama.algebra import Algebra, IndecModule, make_rsz_nakayama
from nakayama.homology import ext1_dim, hom_dim, syzygy, tau
from nakayama import linalg
from nakayama.oracle import (
    OracleError,
    arrow_sources,
    check_relations,
    end_algebra,
    ext1_space_dim,
    hom_space_dim,
    identify_module,
    identity_coords,
    quiver_of,
    syzygy_oracle,
    tau_via_dtr,
    to_representation,
)

M = IndecModule


class TestLinalg:
    def test_rank_and_nullspace(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        assert linalg.rank(rows) == 2
        null = linalg.nullspace(rows, 3)
        assert len(null) == 1
        v = null[0]
        for row in rows:
            assert sum(r * x for r, x in zip(row, v)) == 0

    def test_rank_fraction_entries(self):
        singular = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
        assert linalg.rank(singular) == 1
        rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 1)]]
        assert linalg.rank(rows) == 2

    def test_solve(self):
        rows = [[1, 0], [1, 1]]
        sol = linalg.solve(rows, [3, 2])
        assert sol == [Fraction(3), Fraction(-1)]
        assert linalg.solve([[1, 2], [2, 4]], [1, 3]) is None

    def test_quotient_space(self):
        q = linalg.QuotientSpace([[1, 1, 0]], 3)
        assert q.quotient_dim == 2
        assert q.project([1, 1, 0]) == [Fraction(0)] * 2
        lifted = q.lift(0)
        assert q.project(lifted) == [Fraction(1), Fraction(0)]


class TestRepresentations:
    def test_dims_and_relations(self, gamma_lin3):
        rep = to_representation(gamma_lin3, M(4, 3))
        assert rep.dims == [0, 1, 1, 1, 0]
        assert check_relations(gamma_lin3, rep)

    def test_cyclic_wrap_dims(self, dual_numbers_gamma):
        # M(1,3) passes vertex 1 twice: dimension vector (2, 1).
        rep = to_representation(dual_numbers_gamma, M(1, 3))
        assert rep.dims == [2, 1]
        assert check_relations(dual_numbers_gamma, rep)

    def test_arrow_sources(self):
        assert arrow_sources(Algebra("linear", (1, 1, 2))) == [3]
        assert arrow_sources(make_rsz_nakayama(3, "cyclic")) == [1, 2, 3]

    def test_all_representations_satisfy_relations(self, small_universe):
        for A in small_universe:
            for m in A.indecomposables():
                assert check_relations(A, to_representation(A, m))

    def test_relation_violation_detected(self):
        A = Algebra("cyclic", (2, 2))
        rep = to_representation(A, M(1, 2))
        # Force the length-2 composite around the cycle to be nonzero.
        rep.maps[1] = [[1]]
        rep.maps[2] = [[1]]
        assert not check_relations(A, rep)

    def test_identify_module(self, gamma_lin3):
        for m in gamma_lin3.indecomposables():
            assert identify_module(gamma_lin3, to_representation(gamma_lin3, m)) == m


class TestOracleAgreement:
    def test_hom_agrees(self, small_universe):
        for A in small_universe:
            mods = A.indecomposables()
            for m in mods:
                for nmod in mods:
                    assert hom_space_dim(A, m, nmod) == hom_dim(A, m, nmod)

    def test_ext1_agrees(self, small_universe):
        for A in small_universe:
            mods = A.indecomposables()
            for m in mods:
                for nmod in mods:
                    assert ext1_space_dim(A, m, nmod) == ext1_dim(A, m, nmod)

    def test_syzygy_agrees(self, small_universe):
        for A in small_universe:
            for m in A.indecomposables():
                assert syzygy_oracle(A, m) == syzygy(A, m)

    def test_tau_agrees(self, small_universe):
        for A in small_universe:
            for m in A.indecomposables():
                assert tau_via_dtr(A, m) == tau(A, m)


class TestEndomorphismAlgebras:
    def test_total_dimension_is_hom_sum(self, gamma_lin3):
        mods = list(gamma_lin3.indecomposables())
        table = end_algebra(gamma_lin3, mods)
        expected = sum(hom_dim(gamma_lin3, a, b) for a in mods for b in mods)
        assert table.total_dim == expected

    def test_identity_and_associativity(self, dual_numbers_gamma):
        A = dual_numbers_gamma
        mods = list(A.indecomposables())
        table = end_algebra(A, mods)
        dim = table.total_dim

        def mult(x, y):
            out = [Fraction(0)] * dim
            for f_g, xi in enumerate(x):
                if not xi:
                    continue
                a, b, _ = table.basis_index[f_g]
                for g_g, yj in enumerate(y):
                    if not yj:
                        continue
                    b2, c, _ = table.basis_index[g_g]
                    if b2 != b:
                        continue
                    base = table.block_offsets[(a, c)]
                    for k, coef in enumerate(table.mult[(f_g, g_g)]):
                        out[base + k] += xi * yj * coef
            return out

        ident = [Fraction(0)] * dim
        for a in range(len(mods)):
            base = table.block_offsets[(a, a)]
            for k, coef in enumerate(identity_coords(table, a)):
                ident[base + k] = coef

        basis = [
            [Fraction(1) if t == s else Fraction(0) for t in range(dim)]
            for s in range(dim)
        ]
        for b in basis:
            assert mult(ident, b) == b
            assert mult(b, ident) == b
        for x in basis:
            for y in basis:
                for z in basis:
                    assert mult(mult(x, y), z) == mult(x, mult(y, z))

    def test_dual_numbers_mod_category_dimension(self, dual_numbers_gamma):
        # End of the sum of all K[x]/(x^2) modules transported to the cover:
        # the modules of the cyclic series (3,2) mapping to k and k[x]/(x^2).
        table = end_algebra(
            dual_numbers_gamma, [M(1, 1), M(1, 3)]
        )
        assert table.total_dim == 5

    def test_rejects_duplicate_summands(self, gamma_lin3):
        with pytest.raises(OracleError):
            end_algebra(gamma_lin3, [M(1, 1), M(1, 1)])


class TestQuiverExtraction:
    @pytest.mark.parametrize("kind", ["linear", "cyclic"])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_auslander_quiver_matches_series(self, kind, n):
        from nakayama.auslander import auslander_algebra

        lam = make_rsz_nakayama(n, kind)
        res = auslander_algebra(lam)
        gamma = res.gamma
        mods = [res.dictionary[v] for v in gamma.vertices]
        data = quiver_of(end_algebra(lam, mods))

        assert data.num_vertices == gamma.n
        assert data.total_dim == gamma.dimension()
        expected_arrows = {
            (v, gamma.down(v)): 1
            for v in gamma.vertices
            if gamma.c[v - 1] >= 2
        }
        assert data.arrow_counts == expected_arrows
        for a in gamma.vertices:
            for b in gamma.vertices:
                assert data.block_dims[(a, b)] == gamma.path_count(b, a)
