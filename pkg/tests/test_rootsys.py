"""Root systems from Cartan data: counts, pairings, strings, intervals."""

import itertools

import pytest

from chevalley.exactnum import Q
from chevalley.rootsys import ROOT_COUNTS, build

from conftest import TYPE_MATRIX, cached_system

EXPECTED_COUNTS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 12, ("B", 2): 8,
    ("C", 3): 18, ("D", 4): 24, ("G", 2): 12,
}
EXPECTED_WEYL = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8,
    ("C", 3): 48, ("D", 4): 192, ("G", 2): 12,
}
EXPECTED_COXETER = {
    ("A", 1): 2, ("A", 2): 3, ("A", 3): 4, ("B", 2): 4,
    ("C", 3): 6, ("D", 4): 6, ("G", 2): 6,
}


class TestConstruction:
    @pytest.mark.parametrize("label,rank", TYPE_MATRIX)
    def test_counts(self, label, rank):
        rs = cached_system(label, rank)
        assert len(rs.roots) == EXPECTED_COUNTS[(label, rank)]
        assert len(rs.positive_roots) == len(rs.roots) // 2
        assert rs.weyl_order() == EXPECTED_WEYL[(label, rank)]
        assert rs.coxeter_number() == EXPECTED_COXETER[(label, rank)]

    def test_large_types_buildable(self):
        assert len(build("F", 4).roots) == 48
        assert len(build("E", 6).roots) == 72

    @pytest.mark.parametrize("label,rank", [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("A", 0), ("H", 2)])
    def test_invalid_ranks_rejected(self, label, rank):
        with pytest.raises(ValueError):
            build(label, rank)

    def test_bool_rank_rejected(self):
        with pytest.raises(ValueError):
            build("A", True)

    def test_ordering_deterministic(self):
        rs = cached_system("B", 2)
        keys = [(rs.height(r), r) for r in rs.roots]
        assert keys == sorted(keys)


class TestPairings:
    @pytest.mark.parametrize("label,rank", TYPE_MATRIX)
    def test_integral(self, label, rank):
        rs = cached_system(label, rank)
        for a in rs.roots:
            for b in rs.roots:
                p = rs.pair(a, b)
                assert p == int(p)

    def test_g2_simple_pairings(self):
        rs = cached_system("G", 2)
        a1, a2 = rs.simple_root(1), rs.simple_root(2)
        assert rs.pair(a1, a2) == -1
        assert rs.pair(a2, a1) == -3

    def test_lengths_normalized(self):
        simply = cached_system("A", 3)
        assert {simply.symmetric_form(r, r) for r in simply.roots} == {2}
        b2 = cached_system("B", 2)
        assert {b2.symmetric_form(r, r) for r in b2.roots} == {2, 4}
        g2 = cached_system("G", 2)
        assert {g2.symmetric_form(r, r) for r in g2.roots} == {2, 6}

    def test_pair_rejects_zero(self):
        rs = cached_system("A", 2)
        with pytest.raises(ValueError):
            rs.pair(rs.simple_root(1), (0, 0))


class TestReflections:
    @pytest.mark.parametrize("label,rank", TYPE_MATRIX)
    def test_closure(self, label, rank):
        rs = cached_system(label, rank)
        for a in rs.roots:
            for b in rs.roots:
                assert rs.is_root(rs.reflect(a, b))

    def test_reflect_involution(self):
        rs = cached_system("C", 3)
        for a in rs.roots:
            for b in rs.roots:
                assert rs.reflect(a, rs.reflect(a, b)) == b

    def test_reflect_needs_root(self):
        rs = cached_system("A", 2)
        with pytest.raises(ValueError):
            rs.reflect((2, 0), (1, 0))


class TestRootStrings:
    @pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
    def test_unbroken_and_balanced(self, label, rank):
        rs = cached_system(label, rank)
        for a, b in itertools.product(rs.roots, rs.roots):
            if a == b or a == rs.negative(b):
                continue
            p, q = rs.root_string(a, b)
            # membership is an unbroken interval [-p, q]
            for j in range(-p, q + 1):
                shifted = tuple(x + j * y for x, y in zip(b, a))
                assert rs.is_root(shifted) or all(c == 0 for c in shifted)
            assert p - q == rs.pair(b, a)

    def test_string_length_bound(self):
        for label, rank in TYPE_MATRIX:
            rs = cached_system(label, rank)
            for a, b in itertools.product(rs.roots, rs.roots):
                if a != b and a != rs.negative(b):
                    p, q = rs.root_string(a, b)
                    assert p + q <= 3  # longest string has 4 roots (G_2)


class TestInterval:
    def oracle(self, rs, a, b, grid=7):
        hits = set()
        for i in range(1, grid):
            for j in range(1, grid):
                if rs.is_root(tuple(i * x + j * y for x, y in zip(a, b))):
                    hits.add((i, j))
        return hits

    @pytest.mark.parametrize("label,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)])
    def test_against_wide_grid(self, label, rank):
        rs = cached_system(label, rank)
        for a, b in itertools.product(rs.roots, rs.roots):
            if a == b or a == rs.negative(b):
                continue
            got = {(i, j) for _, i, j in rs.interval(a, b)}
            assert got == self.oracle(rs, a, b)

    def test_a2_example(self):
        rs = cached_system("A", 2)
        a1, a2 = rs.simple_root(1), rs.simple_root(2)
        assert [(i, j) for _, i, j in rs.interval(a1, a2)] == [(1, 1)]

    def test_g2_example(self):
        rs = cached_system("G", 2)
        short, long_ = rs.simple_root(1), rs.simple_root(2)
        assert [(i, j) for _, i, j in rs.interval(short, long_)] == [(1, 1), (2, 1), (3, 1), (3, 2)]

    def test_rejects_proportional(self):
        rs = cached_system("A", 2)
        a1 = rs.simple_root(1)
        with pytest.raises(ValueError):
            rs.interval(a1, a1)
        with pytest.raises(ValueError):
            rs.interval(a1, rs.negative(a1))


class TestCoroots:
    @pytest.mark.parametrize("label,rank", TYPE_MATRIX)
    def test_integral_coords(self, label, rank):
        rs = cached_system(label, rank)
        for a in rs.roots:
            co = rs.coroot_coords(a)
            assert all(c == int(c) for c in co)

    def test_simple_coroots_are_unit_vectors(self):
        rs = cached_system("B", 2)
        for i in range(1, rs.rank + 1):
            co = rs.coroot_coords(rs.simple_root(i))
            assert list(co) == [1 if j == i - 1 else 0 for j in range(rs.rank)]


class TestDoc:
    def test_to_doc_roundtrip_fields(self):
        rs = cached_system("A", 2)
        doc = rs.to_doc()
        assert doc["type"] == "A" and doc["rank"] == 2
        assert len(doc["roots"]) == 6 and doc["positive_count"] == 3

    def test_root_counts_table_matches(self):
        for (label, rank) in TYPE_MATRIX:
            assert ROOT_COUNTS[label](rank) == len(cached_system(label, rank).roots)
