"""Closed forms: frozen values, construction agreement, comparison lemmas."""

import pytest

from totecc import families, formulas
from totecc.graph import total_eccentricity


class TestFrozenValues:
    def test_path(self):
        assert formulas.eps_path(1) == 0
        assert formulas.eps_path(2) == 2
        assert formulas.eps_path(5) == 16
        assert formulas.eps_path(7) == 33

    def test_cycle(self):
        assert formulas.eps_cycle(3) == 3
        assert formulas.eps_cycle(5) == 10
        assert formulas.eps_cycle(6) == 18

    def test_star_complete(self):
        assert formulas.eps_star(3) == 5
        assert formulas.eps_star(5) == 9
        assert formulas.eps_complete(7) == 7

    def test_double_broom_max(self):
        assert formulas.eps_double_broom_max(6, 4) == 16
        assert formulas.eps_double_broom_max(8, 2) == 44 == formulas.eps_path(8)
        t = families.double_broom(1, 2, 6)
        assert formulas.eps_double_broom_max(9, 3) == total_eccentricity(t)

    def test_c33(self):
        assert formulas.eps_c33(7) == 24
        assert formulas.eps_c33(8) == 34 == total_eccentricity(families.dumbbell(3, 3, 8))

    def test_unicyclic_max(self):
        assert formulas.eps_unicyclic_max(5) == 13
        assert formulas.eps_unicyclic_max(7) == 29

    def test_kmn_balanced(self):
        assert formulas.eps_kmn_balanced(6, 2) == 14  # r=2 branch
        assert formulas.eps_kmn_balanced(6, 0) == 6  # r=0 collapses to n
        assert formulas.eps_kmn_balanced(5, 1) == total_eccentricity(
            families.complete_with_paths(4, (2, 1, 1, 1))
        )  # r=1 branch

    def test_dumbbell_shared(self):
        assert formulas.eps_dumbbell_shared(4, 4) == 22
        assert formulas.eps_dumbbell_shared(4, 3) == 15
        assert formulas.eps_dumbbell_shared(3, 3) == 9  # bowtie

    def test_tadpole_p(self):
        assert formulas.eps_tadpole_p(6, 3) == 11
        assert formulas.eps_tadpole_p(6, 4) == 15
        for n in range(4, 30):
            assert formulas.eps_tadpole_p(n, 3) == 2 * n - 1

    def test_lollipop(self):
        assert formulas.eps_lollipop_max(7) == 23
        assert formulas.eps_lollipop_max(6) == 15
        for n in range(4, 41):
            assert formulas.eps_lollipop_max(n) == formulas.eps_tadpole_p(n, n - 1)


class TestDomainErrors:
    @pytest.mark.parametrize(
        "fn,args",
        [
            (formulas.eps_path, (0,)),
            (formulas.eps_cycle, (2,)),
            (formulas.eps_star, (2,)),
            (formulas.eps_complete, (1,)),
            (formulas.eps_double_broom_max, (6, 1)),
            (formulas.eps_double_broom_max, (6, 5)),
            (formulas.eps_c33, (5,)),
            (formulas.eps_unicyclic_max, (4,)),
            (formulas.eps_kmn_balanced, (5, 4)),
            (formulas.eps_dumbbell_shared, (3, 4)),
            (formulas.eps_dumbbell_shared, (4, 2)),
            (formulas.eps_tadpole_p, (5, 5)),
            (formulas.eps_lollipop_max, (3,)),
        ],
    )
    def test_out_of_range(self, fn, args):
        with pytest.raises(ValueError):
            fn(*args)


class TestConstructionAgreement:
    """Spot agreement sweeps; the full n <= 200 sweep runs in acceptance."""

    def test_path_cycle_star_complete(self):
        for n in range(1, 41):
            assert formulas.eps_path(n) == total_eccentricity(families.path(n))
            if n >= 3:
                assert formulas.eps_cycle(n) == total_eccentricity(families.cycle(n))
                assert formulas.eps_star(n) == total_eccentricity(families.star(n))
            if n >= 2:
                assert formulas.eps_complete(n) == total_eccentricity(families.complete(n))

    def test_double_broom_l_independence(self):
        for n in range(5, 26):
            for k in range(2, n - 2):
                want = formulas.eps_double_broom_max(n, k)
                for l in range(1, k):
                    t = families.double_broom(l, k - l, n - k)
                    assert total_eccentricity(t) == want, (n, k, l)

    def test_unicyclic_max_is_girth3_tadpole(self):
        for n in range(5, 41):
            assert formulas.eps_unicyclic_max(n) == total_eccentricity(
                families.tadpole_l(n, 3)
            )

    def test_tadpole_p_sweep(self):
        for n in range(4, 41):
            for g in range(3, n):
                assert formulas.eps_tadpole_p(n, g) == total_eccentricity(
                    families.tadpole_p(n, g)
                ), (n, g)

    def test_kmn_sweep(self):
        for n in range(2, 41):
            for s in range(0, n - 1):
                assert formulas.eps_kmn_balanced(n, s) == total_eccentricity(
                    families.kmn_balanced(n, s)
                ), (n, s)

    def test_dumbbell_shared_sweep(self):
        for m2 in range(3, 13):
            for m1 in range(m2, 13):
                n = m1 + m2 - 1
                assert formulas.eps_dumbbell_shared(m1, m2) == total_eccentricity(
                    families.dumbbell(m1, m2, n)
                ), (m1, m2)

    def test_c33_sweep(self):
        for n in range(6, 41):
            assert formulas.eps_c33(n) == total_eccentricity(families.dumbbell(3, 3, n))

    def test_lollipop_sweep(self):
        for n in range(4, 41):
            assert formulas.eps_lollipop_max(n) == total_eccentricity(
                families.tadpole_l(n, n - 1)
            )


class TestComparisonLemmas:
    def test_c33_beats_cycle(self):
        for n in range(7, 201):
            assert formulas.eps_c33(n) > formulas.eps_cycle(n)

    def test_c33_beats_other_shared_dumbbells(self):
        for n in range(7, 201):
            for m2 in range(3, n // 2 + 1):
                m1 = n + 1 - m2
                if m1 < m2 or (m1, m2) == (3, 3):
                    continue
                assert formulas.eps_c33(n) > formulas.eps_dumbbell_shared(m1, m2), (m1, m2)

    def test_shared_dumbbell_vs_lollipop_with_equality_cases(self):
        for n in range(5, 201):
            for m2 in range(3, n // 2 + 1):
                m1 = n + 1 - m2
                if m1 < m2:
                    continue
                lhs = formulas.eps_dumbbell_shared(m1, m2)
                rhs = formulas.eps_lollipop_max(n)
                assert lhs <= rhs, (m1, m2)
                expect_equal = m1 % 2 == 0 and m2 == 3
                assert (lhs == rhs) == expect_equal, (m1, m2)

    def test_tadpole_p_monotone_in_girth_with_equality_iff_even(self):
        for n in range(5, 201):
            for g in range(3, n - 1):
                lo = formulas.eps_tadpole_p(n, g)
                hi = formulas.eps_tadpole_p(n, g + 1)
                assert lo <= hi, (n, g)
                assert (lo == hi) == (g % 2 == 0), (n, g)

    def test_global_bounds(self):
        # n <= eps(G) <= eps(P_n) endpoints agree with the closed forms
        for n in range(2, 201):
            assert formulas.eps_complete(n) == n
            assert formulas.eps_path(n) >= n


class TestFormulaForFamily:
    def test_known(self):
        from totecc.families import FamilySpec

        cases = [
            (FamilySpec("path", (9,)), formulas.eps_path(9)),
            (FamilySpec("cycle", (8,)), formulas.eps_cycle(8)),
            (FamilySpec("dumbbell", (3, 3, 9)), formulas.eps_c33(9)),
            (FamilySpec("dumbbell", (4, 3, 6)), 15),
            (FamilySpec("tadpole_l", (9, 3)), formulas.eps_unicyclic_max(9)),
            (FamilySpec("tadpole_l", (9, 8)), formulas.eps_lollipop_max(9)),
            (FamilySpec("tadpole_p", (9, 4)), formulas.eps_tadpole_p(9, 4)),
            (FamilySpec("complete_with_pendants", (9, 3)), 17),
            (FamilySpec("complete_with_paths", (3, 2, 2, 1)), formulas.eps_kmn_balanced(5, 2)),
            (FamilySpec("double_broom", (2, 2, 4)), formulas.eps_double_broom_max(8, 4)),
        ]
        for spec, want in cases:
            assert formulas.formula_for_family(spec) == want
            assert total_eccentricity(spec.build()) == want

    def test_none_where_out_of_scope(self):
        from totecc.families import FamilySpec

        for spec in [
            FamilySpec("spider_balanced", (9, 3)),
            FamilySpec("double_spider", (10, 4, 2)),
            FamilySpec("tadpole_l", (9, 5)),
            FamilySpec("dumbbell", (4, 4, 10)),
            FamilySpec("complete_with_paths", (3, 4, 1, 1)),
        ]:
            assert formulas.formula_for_family(spec) is None
