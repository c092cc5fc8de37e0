from itertools import product

import pytest

from prmw import (
    GF,
    BudgetExceeded,
    CodeParams,
    DomainError,
    Poly,
    affine_points,
    build,
    check_subspace_bounds,
    codeword_support,
    dehomogenize_on_chart,
    enumerate_subspaces,
    find_avoiding_subspace,
    find_avoiding_subspace_at_least,
    gaussian_binomial,
    parse_poly,
    projective_points,
    projective_support,
    subspace_from_forms,
    w1_prm,
    zero_set_is_hyperplane_union,
)

gf2 = GF(2)
gf3 = GF(3)


def nonzero_messages(dim, q):
    for msg in product(range(q), repeat=dim):
        if any(msg):
            yield msg


class TestEnumeration:
    def test_counts_p3_gf2(self):
        assert len(enumerate_subspaces(3, gf2, 2)) == 15  # hyperplanes
        assert len(enumerate_subspaces(3, gf2, 1)) == 35  # lines
        assert len(enumerate_subspaces(2, gf2, 1)) == 7

    @pytest.mark.parametrize("n,s,q", [(2, 0, 2), (2, 1, 3), (3, 1, 2), (3, 0, 3), (2, 1, 5)])
    def test_count_matches_gaussian_binomial(self, n, s, q):
        subs = enumerate_subspaces(n, GF(q), s)
        assert len(subs) == gaussian_binomial(n + 1, s + 1, q)
        assert len({sub.mask for sub in subs}) == len(subs)

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (2, 3)])
    def test_hyperplane_point_duality(self, n, q):
        pts = projective_points(n, GF(q))
        assert len(enumerate_subspaces(n, GF(q), n - 1)) == len(pts)

    @pytest.mark.parametrize("n,s,q", [(3, 1, 2), (2, 1, 3)])
    def test_subspace_internal_invariants(self, n, s, q):
        gf = GF(q)
        pts = projective_points(n, gf)
        for sub in enumerate_subspaces(n, gf, s):
            assert len(sub.point_indices) == (q ** (s + 1) - 1) // (q - 1)
            assert len(sub.forms) == n - s
            for i in sub.point_indices:
                for form in sub.forms:
                    assert sum(a * c for a, c in zip(form, pts[i])) % q == 0

    def test_dimension_range(self):
        with pytest.raises(DomainError):
            enumerate_subspaces(3, gf2, 3)
        with pytest.raises(DomainError):
            enumerate_subspaces(3, gf2, -1)

    def test_cap(self):
        with pytest.raises(BudgetExceeded):
            enumerate_subspaces(3, gf2, 1, cap=10)

    def test_subspace_from_forms(self):
        h = subspace_from_forms([(1, 0, 0)], 2, gf2)
        assert h.dim == 1 and h.point_indices == (0, 1, 2)
        with pytest.raises(DomainError):
            subspace_from_forms([(1, 0, 0), (1, 0, 0)], 2, gf2)


class TestAvoidingSubspace:
    def test_product_support_p2(self):
        f = parse_poly("X0*X1", 3, gf2)
        support = projective_support(f, 2, gf2)
        pts = projective_points(2, gf2)
        assert [pts[i] for i in support] == [(1, 1, 0), (1, 1, 1)]
        found = find_avoiding_subspace(support, 2, gf2, 1)
        assert found is not None
        assert not set(found.point_indices) & set(support)
        # the hyperplane X0 = 0 avoids it as well
        x0 = subspace_from_forms([(1, 0, 0)], 2, gf2)
        assert not set(x0.point_indices) & set(support)

    def test_whole_space_has_no_avoider(self):
        support = range(len(projective_points(2, gf2)))
        assert find_avoiding_subspace(support, 2, gf2, 1) is None

    def test_quadric_line(self):
        f = parse_poly("X0*X3+X1*X2", 4, gf2)
        support = projective_support(f, 3, gf2)
        found = find_avoiding_subspace(support, 3, gf2, 1)
        assert found is not None and found.dim == 1
        # the specific line X0 = X1 = 0 avoids the support
        line = subspace_from_forms([(1, 0, 0, 0), (0, 1, 0, 0)], 3, gf2)
        assert not set(line.point_indices) & set(support)
        # but no hyperplane does
        assert find_avoiding_subspace(support, 3, gf2, 2) is None
        best = find_avoiding_subspace_at_least(support, 3, gf2, 0)
        assert best.dim == 1

    def test_empty_support_rejected(self):
        with pytest.raises(DomainError):
            find_avoiding_subspace([], 2, gf2, 1)

    def test_first_in_enumeration_order(self):
        f = parse_poly("X0*X1", 3, gf2)
        support = projective_support(f, 2, gf2)
        subs = enumerate_subspaces(2, gf2, 1)
        smask = sum(1 << i for i in support)
        first = next(s for s in subs if not s.mask & smask)
        assert find_avoiding_subspace(support, 2, gf2, 1) == first


class TestSubspaceBounds:
    def test_all_codewords_prm_2_2(self):
        code = build(CodeParams("prm", 2, 2, 2))
        for msg in nonzero_messages(code.dimension, 2):
            support = codeword_support(code, msg)
            assert check_subspace_bounds(support, code.params, dims=[1]) == []

    def test_quadric_codeword(self):
        f = parse_poly("X0*X3+X1*X2", 4, gf2)
        support = projective_support(f, 3, gf2)
        assert check_subspace_bounds(support, CodeParams("prm", 2, 3, 2)) == []

    def test_adversarial_single_point(self):
        # one point meets some plane in exactly 1 < W1_PRM(2, 2) = 2
        params = CodeParams("prm", 2, 3, 2)
        assert w1_prm(2, 2, 2) == 2
        violations = check_subspace_bounds([0], params, dims=[2])
        assert violations and all(v.meet_size == 1 and v.required == 2 for v in violations)

    def test_requires_projective_order(self):
        with pytest.raises(DomainError):
            check_subspace_bounds([0], CodeParams("prm", 2, 3, 1))


class TestHyperplaneUnion:
    def test_product_of_forms(self):
        res = zero_set_is_hyperplane_union(parse_poly("X0*X1", 3, gf2), 2, gf2)
        assert res.is_union and res.uncovered == ()
        assert sorted(h.forms[0] for h in res.hyperplanes) == [(0, 1, 0), (1, 0, 0)]

    def test_irreducible_quadric(self):
        res = zero_set_is_hyperplane_union(parse_poly("X0*X3+X1*X2", 4, gf2), 3, gf2)
        assert not res.is_union
        assert len(res.uncovered) == 9  # the whole quadric is uncovered

    def test_power_of_form(self):
        res = zero_set_is_hyperplane_union(parse_poly("X0^2", 3, gf2), 2, gf2)
        assert res.is_union
        assert [h.forms[0] for h in res.hyperplanes] == [(1, 0, 0)]

    def test_nowhere_nonzero_rejected(self):
        # an ideal generator vanishes on every point
        vanishing = parse_poly("X1^2*X0+X0^2*X1", 3, gf2)
        with pytest.raises(DomainError):
            zero_set_is_hyperplane_union(vanishing, 2, gf2)


class TestDehomogenize:
    def test_product_on_chart(self):
        f = parse_poly("X0*X1", 3, gf2)
        h0 = subspace_from_forms([(1, 0, 0)], 2, gf2)
        g = dehomogenize_on_chart(f, h0)
        assert g.nvars == 2 and g.degree() <= 1
        assert sum(1 for p in affine_points(2, gf2) if g.evaluate(p)) == 2

    def test_square_becomes_constant(self):
        f = parse_poly("X0^2", 3, gf2)
        h0 = subspace_from_forms([(1, 0, 0)], 2, gf2)
        g = dehomogenize_on_chart(f, h0)
        assert g == Poly.constant(gf2, 2, 1)
        assert sum(1 for p in affine_points(2, gf2) if g.evaluate(p)) == 4

    def test_meeting_hyperplane_rejected(self):
        f = parse_poly("X0*X3+X1*X2", 4, gf2)
        h0 = subspace_from_forms([(1, 0, 0, 0)], 3, gf2)
        with pytest.raises(DomainError):
            dehomogenize_on_chart(f, h0)  # (0,1,1,0) is in the support

    def test_non_hyperplane_rejected(self):
        f = parse_poly("X0*X1", 3, gf2)
        point = subspace_from_forms([(0, 1, 0), (0, 0, 1)], 2, gf2)
        with pytest.raises(DomainError):
            dehomogenize_on_chart(f, point)

    def test_inhomogeneous_rejected(self):
        f = parse_poly("X0*X1+X2", 3, gf2)
        h = subspace_from_forms([(1, 0, 0)], 2, gf2)
        with pytest.raises(DomainError):
            dehomogenize_on_chart(f, h)

    @pytest.mark.parametrize("q,n,d", [(2, 2, 2), (3, 2, 2)])
    def test_weight_preserved_on_every_avoidable_codeword(self, q, n, d):
        # the chart reduction drops the degree and keeps the weight
        gf = GF(q)
        code = build(CodeParams("prm", q, n, d))
        apts = affine_points(n, gf)
        reduced = 0
        for msg in nonzero_messages(code.dimension, q):
            support = codeword_support(code, msg)
            if not support:
                continue
            h = find_avoiding_subspace(support, n, gf, n - 1)
            if h is None:
                continue
            f = code.poly_for_message(msg)
            g = dehomogenize_on_chart(f, h)
            assert g.degree() <= d - 1
            assert sum(1 for p in apts if g.evaluate(p)) == len(support)
            reduced += 1
        assert reduced > 0


class TestQuadricPencil:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_three_hyperplanes_split_the_support_evenly(self, n):
        # exactly three hyperplanes contain the avoided line X0=X1=0, and
        # each carries a quarter-sized slice 2^(n-2) of the quadric support
        f = parse_poly("X0*X3+X1*X2", n + 1, gf2)
        support = set(projective_support(f, n, gf2))
        line_forms = [(1,) + (0,) * n, (0, 1) + (0,) * (n - 1)]
        line = subspace_from_forms(line_forms, n, gf2)
        assert not set(line.point_indices) & support
        through = [
            h
            for h in enumerate_subspaces(n, gf2, n - 1)
            if set(line.point_indices) <= set(h.point_indices)
        ]
        assert len(through) == 3
        slices = [set(h.point_indices) & support for h in through]
        assert all(len(s) == 2 ** (n - 2) for s in slices)
        assert set().union(*slices) == support


class TestSupportExtraction:
    def test_arity_checked(self):
        with pytest.raises(DomainError):
            projective_support(parse_poly("X0", 2, gf2), 2, gf2)

    def test_matches_codeword_support(self):
        code = build(CodeParams("prm", 2, 2, 2))
        for msg in [(1, 0, 0, 0, 0, 0), (0, 1, 1, 0, 0, 1), (1, 1, 1, 1, 1, 1)]:
            f = code.poly_for_message(msg)
            assert tuple(projective_support(f, 2, gf2)) == codeword_support(code, msg)
