"""Activation and RA matrices, divisors, classification, and pair signs."""

import random
from itertools import combinations
from math import prod

import pytest

from ramat.graphs import (
    complete,
    crown,
    cube,
    cycle,
    degree,
    folded_cube,
    girth,
    graph6_decode,
    is_connected,
    kneser,
    path,
)
from ramat.intlin import lattice_contains
from ramat.products import cartesian, disjoint_union
from ramat.ra_core import (
    activation_matrix,
    classification_record,
    classify,
    elementary_divisors,
    is_neighborly,
    is_negatively_neighborly,
    is_positively_neighborly,
    pair_sign,
    ra_lattice,
    ra_matrix,
)

from support import random_graph


class TestActivationMatrix:
    def test_k3_all_ones(self):
        assert activation_matrix(complete(3)).matrix.data == ((1, 1, 1),) * 3

    def test_p3(self):
        assert activation_matrix(path(3)).matrix.data == (
            (1, 1, 0), (1, 1, 1), (0, 1, 1),
        )

    def test_symmetric_unit_diagonal(self):
        rng = random.Random(1)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), 0.5)
            m = activation_matrix(g).matrix
            assert all(m.data[i][i] == 1 for i in range(g.n))
            assert m == m.transpose()


class TestRAMatrix:
    def test_p3_rows(self):
        rm = ra_matrix(path(3))
        assert set(rm.matrix.data) == {
            (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 1, 0),
        }
        assert len(rm.matrix.data) == 4

    def test_complete_graph_single_row(self):
        for n in (2, 3, 5):
            rm = ra_matrix(complete(n))
            assert rm.matrix.data == ((1,) * n,)
            assert rm.provenance == ((1,),)

    def test_no_zero_or_duplicate_rows(self):
        rng = random.Random(2)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.4)
            rm = ra_matrix(g)
            rows = rm.matrix.data
            assert len(set(rows)) == len(rows)
            assert all(any(r) for r in rows)

    def test_provenance_rows_match_sources(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 7), 0.5)
            rm = ra_matrix(g)
            for row, src in zip(rm.matrix.data, rm.provenance):
                if len(src) == 1:
                    mask = g.closed_mask(src[0])
                else:
                    mask = g.closed_mask(src[0]) & g.closed_mask(src[1])
                assert tuple(mask >> j & 1 for j in range(g.n)) == row

    def test_crown8_row_count(self):
        # 8 neighborhoods + nonzero, distinct pair intersections
        rm = ra_matrix(crown(8))
        rows = rm.matrix.data
        assert len(rows) == len(set(rows))
        vertex_rows = sum(1 for p in rm.provenance if len(p) == 1)
        assert vertex_rows == 8


class TestElementaryDivisors:
    def test_cube3(self):
        assert elementary_divisors(cube(3)).divisors == (1,) * 7 + (2,)

    def test_kneser_6_2(self):
        assert elementary_divisors(kneser(6, 2)).divisors == (1,) * 11 + (2,) * 4

    def test_k3(self):
        sf = elementary_divisors(complete(3))
        assert sf.divisors == (1, 0, 0)
        assert sf.nullity == 2

    def test_padding_length_always_n(self):
        rng = random.Random(4)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 8), 0.4)
            assert len(elementary_divisors(g).divisors) == g.n

    def test_relabeling_invariance(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            perm = list(range(g.n))
            rng.shuffle(perm)
            adj = [0] * g.n
            for u in range(g.n):
                for w in range(g.n):
                    if g.adj[u] >> w & 1:
                        adj[perm[u]] |= 1 << perm[w]
            from ramat.graphs import Graph

            h = Graph(g.n, adj)
            assert (
                elementary_divisors(g).divisors
                == elementary_divisors(h).divisors
            )


class TestClassify:
    def test_cube_chain(self):
        assert classify(cube(4)).status == "RA"
        c = classify(cube(3))
        assert c.status == "1/2-RA" and c.mu == 2

    def test_crown_family(self):
        for half in range(4, 9):
            c = classify(crown(2 * half))
            assert c.status == f"1/{half - 2}-RA"
            assert c.mu == half - 2

    def test_kernel_graph_general(self):
        c = classify(graph6_decode("I?otQji\\O"))
        assert c.status == "general"
        assert c.divisors == (1,) * 9 + (0,)
        assert c.nullity == 1

    def test_pyramid_axis_multiple_of_apex_is_one(self):
        from ramat.products import pyramid

        c = classify(pyramid(crown(10)))
        assert c.status == "1/3-RA"
        assert c.axis_multiples[0] == 1
        assert set(c.axis_multiples[1:]) == {3}

    def test_ra_iff_all_divisors_one(self):
        rng = random.Random(6)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            if not is_connected(g):
                continue
            c = classify(g)
            assert (c.status == "RA") == all(d == 1 for d in c.divisors)
            if c.status == "RA":
                assert set(c.axis_multiples) == {1}

    def test_axis_divides_last_divisor_full_rank(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 8), 0.6)
            if not is_connected(g):
                continue
            c = classify(g)
            if c.nullity == 0:
                top = c.divisors[-1]
                assert all(top % a == 0 for a in c.axis_multiples)

    def test_disconnected_gives_component_list(self):
        g = disjoint_union([complete(3), path(3)])
        out = classify(g)
        assert isinstance(out, list) and len(out) == 2
        assert out[0].status == "general"  # K3
        assert out[1].status == "RA"  # P3

    def test_record_fields(self):
        g = crown(10)
        rec = classification_record(g)
        assert rec == {
            "n": 10,
            "girth": 4,
            "bipartite": True,
            "connected": True,
            "divisors": [1] * 9 + [3],
            "nullity": 0,
            "status": "1/3-RA",
            "mu": 3,
            "axis_multiples": [3] * 10,
        }

    def test_record_rejects_disconnected_without_classification(self):
        g = disjoint_union([complete(2), complete(2)])
        with pytest.raises(ValueError):
            classification_record(g)


class TestArrangementQuantifier:
    def test_hermite_diagonal_multiset_under_random_column_orders(self):
        # the 1/k verdict promises diagonal multiset {1^(n-1), k} for every
        # column arrangement; spot-check with random permutations, including
        # the pyramid whose apex multiple is 1
        from ramat.graphs import Graph
        from ramat.intlin import IntMatrix, hermite_normal_form
        from ramat.products import pyramid
        from support import connected_graphs_up_to_iso

        rng = random.Random(17)
        cases = [g for g in connected_graphs_up_to_iso(5)]
        cases += [crown(8), crown(10), pyramid(crown(8)), pyramid(crown(10))]
        for g in cases:
            c = classify(g)
            if c.mu is None:
                continue
            want = sorted([1] * (g.n - 1) + [c.mu])
            data = ra_matrix(g).matrix.data
            for _ in range(8):
                perm = list(range(g.n))
                rng.shuffle(perm)
                pm = IntMatrix([[row[j] for j in perm] for row in data])
                h = hermite_normal_form(pm)
                assert sorted(h.diagonal) == want, (g.n, c.status, perm)


class TestPairSignsAndNeighborliness:
    def test_k3_signs(self):
        assert pair_sign(complete(3), 1, 2) == "none"
        assert not is_neighborly(complete(3))

    def test_ra_graph_both(self):
        g = path(4)
        assert classify(g).status == "RA"
        for u, v in combinations(g.vertices(), 2):
            assert pair_sign(g, u, v) == "both"

    def test_girth4_positive(self):
        for g in (cube(3), crown(10), folded_cube(5), cycle(4)):
            assert girth(g) == 4
            assert is_positively_neighborly(g)

    def test_adjacent_pair_in_girth4_is_positive(self):
        g = crown(8)
        lat = ra_lattice(g)
        for u, v in g.edges():
            e = [0] * g.n
            e[u - 1] += 1
            e[v - 1] += 1
            assert lattice_contains(lat, e)

    def test_cartesian_products_neighborly(self):
        cases = [
            (complete(3), complete(3)),
            (path(3), cycle(5)),
            (cycle(4), complete(2)),
            (complete(4), path(2)),
        ]
        for a, b in cases:
            assert is_neighborly(cartesian(a, b))

    def test_negatively_neighborly_example(self):
        # prisms over non-bipartite graphs are negatively neighborly
        from ramat.products import prism

        assert is_negatively_neighborly(prism(complete(3)))

    def test_connected_neighborly_extends_to_all_pairs(self):
        rng = random.Random(8)
        checked = 0
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 7), 0.5)
            if not is_connected(g) or not is_neighborly(g):
                continue
            checked += 1
            for u, v in combinations(g.vertices(), 2):
                assert pair_sign(g, u, v) != "none"
        assert checked >= 10

    def test_pair_sign_rejects_equal_vertices(self):
        with pytest.raises(ValueError):
            pair_sign(complete(3), 2, 2)


class TestHalfRAEquivalence:
    def test_parity_characterization_on_small_corpus(self):
        # neighborly graph is 1/2-RA exactly when degrees are all odd and
        # every vertex pair has an even number of common neighbors
        from support import connected_graphs_up_to_iso

        for n in range(2, 7):
            for g in connected_graphs_up_to_iso(n):
                if not is_neighborly(g):
                    continue
                c = classify(g)
                lat = ra_lattice(g)
                doubled = any(
                    lattice_contains(
                        lat, [2 if w == v else 0 for w in range(g.n)]
                    )
                    for v in range(g.n)
                )
                small = c.status in ("RA", "1/2-RA")
                assert doubled == small
                if small:
                    odd_deg = all(degree(g, v) % 2 for v in g.vertices())
                    even_common = all(
                        (g.adj[u - 1] & g.adj[v - 1]).bit_count() % 2 == 0
                        for u, v in combinations(g.vertices(), 2)
                    )
                    assert (c.status == "1/2-RA") == (odd_deg and even_common)
