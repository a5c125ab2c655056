import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gtspace import connectives as C
from gtspace.connectives import (
    limp,
    limp_closed_link,
    product,
    tensor,
    tensor_sum,
    unit_top,
    unit_zero,
    verify_identities,
)
from gtspace.core import Space, new_space
from gtspace.duality import closed_of, dual
from gtspace.errors import SearchSpaceTooLarge
from gtspace.fixtures import all_fixtures, classical
from gtspace.morphisms import find_isomorphism
from gtspace.properties import check_compact, check_hausdorff, check_regular

from strategies import permutations_of, spaces

FIXTURES = all_fixtures()


def small_pairs(limit=256):
    for (na, a), (nb, b) in itertools.product(FIXTURES.items(), repeat=2):
        if b.n_points ** a.n_points <= limit:
            yield pytest.param(a, b, id=f"{na}-{nb}")


class TestLimp:
    def test_one_point_source(self, fuzzy2):
        a = new_space(["x0"], ["U"], [[1]])
        got = limp(a, fuzzy2)
        assert got.n_points == fuzzy2.n_points
        assert got.open_labels == ("(x0,0)", "(x0,A)", "(x0,B)", "(x0,1)")
        assert find_isomorphism(got, fuzzy2) is not None

    def test_labels_and_order(self, sierpinski):
        got = limp(sierpinski, sierpinski)
        assert got.point_labels == ("f[0→0,1→0]", "f[0→0,1→1]", "f[0→1,1→0]", "f[0→1,1→1]")
        assert got.open_labels[:3] == ("(a,{})", "(a,{b})", "(a,{a,b})")

    @given(spaces(max_points=2, max_opens=3), spaces(max_points=3, max_opens=3))
    def test_entry_formula(self, a, b):
        got = limp(a, b)
        for fi, g in enumerate(itertools.product(range(b.n_points), repeat=a.n_points)):
            for x in range(a.n_points):
                for j in range(b.n_opens):
                    assert got.matrix[fi][x * b.n_opens + j] == b.matrix[g[x]][j]

    def test_classical_reading(self, sierpinski, discrete2):
        got = limp(discrete2, sierpinski)
        for fi, g in enumerate(itertools.product(range(2), repeat=2)):
            for x in range(2):
                for j, col in enumerate(sierpinski.columns):
                    inside = col[g[x]] == 1
                    assert (got.matrix[fi][x * 3 + j] == 1) == inside

    def test_cap(self, sierpinski):
        with pytest.raises(SearchSpaceTooLarge):
            limp(sierpinski, sierpinski, cap=3)

    def test_env_cap(self, sierpinski, monkeypatch):
        monkeypatch.setenv("GTS_DEFAULT_CAP", "2")
        with pytest.raises(SearchSpaceTooLarge):
            limp(sierpinski, sierpinski)

    def test_restricted_keeps_continuous_only(self, discrete2, sierpinski):
        full = limp(discrete2, sierpinski)
        restricted = limp(sierpinski, discrete2, restricted=True)
        # only constant maps from Sierpinski into discrete-2 are continuous
        assert restricted.point_labels == ("f[0→0,1→0]", "f[0→1,1→1]")
        assert limp(discrete2, sierpinski, restricted=True) == full

    @pytest.mark.parametrize("a,b", list(small_pairs()))
    def test_hausdorff_inherited(self, a, b):
        if check_hausdorff(b).holds:
            assert check_hausdorff(limp(a, b)).holds

    @pytest.mark.parametrize("a,b", list(small_pairs()))
    def test_regular_inherited(self, a, b):
        link_b = closed_of(b)
        if check_regular(link_b).holds:
            assert check_regular(limp_closed_link(a, b, link_b)).holds

    def test_deterministic(self, fuzzy2, sierpinski):
        assert limp(fuzzy2, sierpinski) == limp(fuzzy2, sierpinski)
        assert tensor(fuzzy2, sierpinski).point_labels == tensor(fuzzy2, sierpinski).point_labels


class TestTensor:
    @given(spaces(max_points=2, max_opens=3), spaces(max_points=2, max_opens=3))
    def test_dual_limp_dual(self, a, b):
        assert tensor(a, b, check=False) == dual(limp(a, dual(b)))

    def test_classical_membership(self, sierpinski, discrete2):
        got = tensor(sierpinski, discrete2)
        opens = [frozenset(p for p, v in zip("ab", col) if v == 1) for col in discrete2.columns]
        for gi, g in enumerate(itertools.product(range(4), repeat=2)):
            for pi, (x, y) in enumerate(itertools.product(range(2), repeat=2)):
                assert (got.matrix[pi][gi] == 1) == ("ab"[y] in opens[g[x]])

    def test_fuzzy_membership(self, fuzzy2):
        got = tensor(fuzzy2, fuzzy2)
        for gi, g in enumerate(itertools.product(range(4), repeat=2)):
            for pi, (x, y) in enumerate(itertools.product(range(2), repeat=2)):
                assert got.matrix[pi][gi] == fuzzy2.matrix[y][g[x]]

    def test_cap(self, fuzzy2):
        with pytest.raises(SearchSpaceTooLarge):
            tensor(fuzzy2, fuzzy2, cap=15)


class TestTensorSum:
    @given(spaces(max_points=2, max_opens=2), spaces(max_points=2, max_opens=3))
    def test_is_limp_of_dual(self, a, b):
        assert tensor_sum(a, b) == limp(dual(a), b)

    def test_top_operand(self, sierpinski):
        got = tensor_sum(unit_top(), sierpinski)
        assert (got.n_points, got.n_opens) == (1, 0)

    def test_classical(self, sierpinski, discrete2):
        got = tensor_sum(sierpinski, discrete2)
        for fi, g in enumerate(itertools.product(range(2), repeat=3)):
            for i in range(3):
                for j in range(4):
                    assert got.matrix[fi][i * 4 + j] == discrete2.matrix[g[i]][j]


class TestSumAndProduct:
    def test_two_singletons(self):
        a = new_space(["x"], ["A"], [["1/3"]])
        b = new_space(["y"], ["B"], [["3/4"]])
        s = C.sum(a, b)
        assert s.point_labels == ("inl(x)", "inr(y)")
        assert s.open_labels == ("(A,B)",)
        assert [r[0] for r in s.matrix] == [a.matrix[0][0], b.matrix[0][0]]

    @given(spaces(max_points=3, max_opens=3), spaces(max_points=3, max_opens=3))
    def test_counts_and_entries(self, a, b):
        s, p = C.sum(a, b), product(a, b)
        assert (s.n_points, s.n_opens) == (a.n_points + b.n_points, a.n_opens * b.n_opens)
        assert (p.n_points, p.n_opens) == (a.n_points * b.n_points, a.n_opens + b.n_opens)
        for x in range(a.n_points):
            for i, j in itertools.product(range(a.n_opens), range(b.n_opens)):
                assert s.matrix[x][i * b.n_opens + j] == a.matrix[x][i]
        for y in range(b.n_points):
            for i, j in itertools.product(range(a.n_opens), range(b.n_opens)):
                assert s.matrix[a.n_points + y][i * b.n_opens + j] == b.matrix[y][j]

    @given(spaces(max_points=3, max_opens=3), spaces(max_points=3, max_opens=3))
    def test_de_morgan(self, a, b):
        assert product(a, b) == dual(C.sum(dual(a), dual(b)))
        assert C.sum(a, b) == dual(product(dual(a), dual(b)))

    @settings(max_examples=60)
    @given(spaces(max_points=3, max_opens=3))
    def test_units(self, a):
        for built in (C.sum(a, unit_zero()), C.sum(unit_zero(), a)):
            assert find_isomorphism(built, a) is not None
        for built in (product(a, unit_top()), product(unit_top(), a)):
            assert find_isomorphism(built, a) is not None

    def test_zero_plus_zero(self):
        z = C.sum(unit_zero(), unit_zero())
        assert (z.n_points, z.n_opens) == (0, 1)
        assert find_isomorphism(z, unit_zero()) is not None

    def test_swapped_tags_break_the_unit_law(self, sierpinski):
        # tags on the open side for the sum (points X x Y, opens A + B) is the product shape
        swapped = product(sierpinski, unit_zero())
        assert swapped.n_points == 0
        assert find_isomorphism(swapped, sierpinski) is None


class TestUnits:
    def test_shapes(self):
        assert (unit_zero().n_points, unit_zero().n_opens) == (0, 1)
        assert (unit_top().n_points, unit_top().n_opens) == (1, 0)

    def test_dual(self):
        assert dual(unit_zero()) == unit_top()
        assert dual(unit_top()) == unit_zero()

    def test_vacuous_properties(self):
        assert check_compact(unit_zero()).holds
        assert check_hausdorff(unit_top()).holds


class TestClosedLimp:
    def test_phi_star(self, sierpinski, discrete2):
        link_b = closed_of(discrete2, phi=[3, 2, 1, 0])
        link = limp_closed_link(sierpinski, discrete2, link_b)
        assert link.phi == (3, 2, 1, 0, 7, 6, 5, 4)
        assert link.closed_space.open_labels[0] == "(a,{a,b}^c)"

    @settings(max_examples=40)
    @given(spaces(max_points=2, max_opens=2), spaces(max_points=2, max_opens=3), st.data())
    def test_iso_with_closed_operands(self, a, b, data):
        la = closed_of(a, phi=data.draw(permutations_of(a.n_opens)))
        lb = closed_of(b, phi=data.draw(permutations_of(b.n_opens)))
        left = limp_closed_link(a, b, lb).closed_space
        right = limp(la.closed_space, lb.closed_space)
        assert find_isomorphism(left, right) is not None


class TestVerifyIdentities:
    def test_sierpinski_discrete(self, sierpinski, discrete2):
        report = verify_identities(sierpinski, discrete2)
        assert report.holds
        assert {w["law"] for w in report.witnesses} >= {
            "sum_right_unit[a]", "product_left_unit[b]", "top_is_dual_zero", "de_morgan_iso",
            "tensor_is_dual_limp", "tensor_sum_is_limp", "closed_limp_entries", "closed_limp_iso",
        }
        assert all(w["status"] == "pass" for w in report.witnesses)

    def test_degenerate_units(self):
        assert verify_identities(unit_zero(), unit_top()).holds

    def test_skipped_laws_do_not_fail(self, fuzzy2):
        report = verify_identities(fuzzy2, fuzzy2, cap=5)
        assert report.holds
        skipped = {w["law"] for w in report.witnesses if w["status"] == "skipped"}
        # limp carrier 2^2 fits the cap; tensor (4^2) and tensor sum (2^4) do not
        assert skipped == {"tensor_is_dual_limp", "tensor_sum_is_limp"}

    def test_failure_is_reported(self, monkeypatch, sierpinski):
        # a sum that forgets the right operand's opens must trip the unit and De Morgan laws
        def broken(a, b):
            return Space(a.point_labels, a.open_labels, a.matrix)

        monkeypatch.setattr(C, "sum", broken)
        report = verify_identities(sierpinski, classical("c", "", "c"))
        assert not report.holds
        assert any(w["status"] == "fail" for w in report.witnesses)
