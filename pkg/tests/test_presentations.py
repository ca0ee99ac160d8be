import pytest

from chowbg.errors import UnsupportedError
from chowbg.groups import parse_group_expr
from chowbg.presentations import (
    EXACT_PRESENTATION,
    GENERATORS_ONLY,
    additive_table_from_presentation,
    catalog_presentation,
)
from oracles import monomial_table, poincare_coefficients


def pres(text):
    return catalog_presentation(parse_group_expr(text))


class TestCatalog:
    def test_o3(self):
        p = pres("O(3)")
        assert p.generators == (("c1", 1), ("c2", 2), ("c3", 3))
        assert p.torsion_relations == ((2, "c1"), (2, "c3"))
        assert p.completeness == EXACT_PRESENTATION

    def test_sp4(self):
        p = pres("Sp(4)")
        assert p.generators == (("c2", 2), ("c4", 4))
        assert p.torsion_relations == ()

    def test_g2_generators_only(self):
        p = pres("G2")
        assert p.generators == tuple((f"c{i}", i) for i in range(1, 8))
        assert p.completeness == GENERATORS_ONLY

    def test_so_odd(self):
        p = pres("SO(7)")
        assert p.generators == tuple((f"c{i}", i) for i in range(2, 8))
        assert p.torsion_relations == ((2, "c3"), (2, "c5"), (2, "c7"))

    def test_gm(self):
        assert pres("Gm").generators == (("c1", 1),)

    def test_so_even_rejected(self):
        with pytest.raises(UnsupportedError):
            pres("SO(8)")

    def test_finite_group_rejected(self):
        with pytest.raises(UnsupportedError):
            pres("S_4")

    def test_odd_generators_all_two_torsion(self):
        # self-duality: each odd-degree generator of O / SO carries 2g = 0
        for text in ("O(5)", "O(6)", "SO(9)"):
            p = pres(text)
            related = {name for _, name in p.torsion_relations}
            for name, degree in p.generators:
                assert (degree % 2 == 1) == (name in related)


class TestExpansion:
    def test_o3_degree_2(self):
        t = additive_table_from_presentation(pres("O(3)"), 3)
        assert (t.rows[2].free_rank, t.rows[2].torsion) == (1, (2,))

    def test_o3_degree_3(self):
        t = additive_table_from_presentation(pres("O(3)"), 3)
        assert (t.rows[3].free_rank, t.rows[3].torsion) == (0, (2, 2, 2))

    def test_gl2_degree_2(self):
        t = additive_table_from_presentation(pres("GL(2)"), 2)
        assert (t.rows[2].free_rank, t.rows[2].torsion) == (2, ())

    def test_generators_only_rejected(self):
        with pytest.raises(UnsupportedError):
            additive_table_from_presentation(pres("G2"), 4)

    @pytest.mark.parametrize("text", ["O(1)", "O(2)", "O(3)", "O(4)", "O(5)", "O(6)", "SO(5)", "SO(7)"])
    def test_matches_bruteforce_enumeration(self, text):
        p = pres(text)
        t = additive_table_from_presentation(p, 12)
        expected = monomial_table(p.generators, dict((n, m) for m, n in p.torsion_relations), 12)
        for row in t.rows:
            assert (row.free_rank, sorted(row.torsion)) == expected[row.degree]

    @pytest.mark.parametrize("text", ["GL(1)", "GL(2)", "GL(4)", "Sp(2)", "Sp(4)", "Sp(8)"])
    def test_torsion_free_hilbert_series(self, text):
        p = pres(text)
        t = additive_table_from_presentation(p, 12)
        assert all(not row.torsion for row in t.rows)
        series = poincare_coefficients([d for _, d in p.generators], 12)
        assert [row.free_rank for row in t.rows] == series

    def test_free_part_is_even_index_polynomial_ring(self):
        # rationally, O(n) is a polynomial ring on the even Chern classes
        p = pres("O(6)")
        t = additive_table_from_presentation(p, 12)
        series = poincare_coefficients([2, 4, 6], 12)
        assert [row.free_rank for row in t.rows] == series

    def test_large_expansion_is_fast(self):
        import time

        start = time.monotonic()
        t = additive_table_from_presentation(pres("O(8)"), 64)
        elapsed = time.monotonic() - start
        assert elapsed < 60
        assert t.rows[64].free_rank > 0
