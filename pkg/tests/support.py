"""Independent oracles and corpus helpers for the test suite.

The normal-form oracles here deliberately share no code with the library:
a first-nonzero-pivot textbook reduction and, for small matrices, divisor
chains obtained from gcds of k x k minors.  Disagreement with the library
on any input is a test failure.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd
from pathlib import Path

from ramat.graphs import Graph, is_connected

DATA_DIR = Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# Smith-form oracles


def ref_smith_divisors(rows) -> list:
    """Naive textbook Smith reduction: first nonzero pivot, Euclidean row
    and column clearing, then the add-a-row divisibility repair."""
    mat = [list(map(int, r)) for r in rows]
    m, n = len(mat), len(mat[0])
    out = []
    s = 0
    while s < min(m, n):
        piv = None
        for i in range(s, m):
            for j in range(s, n):
                if mat[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        mat[s], mat[i0] = mat[i0], mat[s]
        for row in mat:
            row[s], row[j0] = row[j0], row[s]
        while True:
            for i in range(s + 1, m):
                while mat[i][s]:
                    q = mat[i][s] // mat[s][s]
                    for k in range(n):
                        mat[i][k] -= q * mat[s][k]
                    if mat[i][s]:
                        mat[s], mat[i] = mat[i], mat[s]
            for j in range(s + 1, n):
                while mat[s][j]:
                    q = mat[s][j] // mat[s][s]
                    for i in range(m):
                        mat[i][j] -= q * mat[i][s]
                    if mat[s][j]:
                        for i in range(m):
                            mat[i][s], mat[i][j] = mat[i][j], mat[i][s]
            if all(mat[i][s] == 0 for i in range(s + 1, m)) and all(
                mat[s][j] == 0 for j in range(s + 1, n)
            ):
                break
        if mat[s][s] < 0:
            mat[s] = [-x for x in mat[s]]
        p = mat[s][s]
        repair = None
        for i in range(s + 1, m):
            for j in range(s + 1, n):
                if mat[i][j] % p:
                    repair = i
                    break
            if repair is not None:
                break
        if repair is not None:
            for k in range(n):
                mat[s][k] += mat[repair][k]
            continue
        out.append(p)
        s += 1
    out += [0] * (min(m, n) - len(out))
    return out


def determinantal_divisors(rows) -> list:
    """Divisor chain from gcds of k x k minors; independent of any
    elimination.  Only sensible for small matrices."""
    mat = [list(map(int, r)) for r in rows]
    m, n = len(mat), len(mat[0])

    def det(sub):
        k = len(sub)
        if k == 1:
            return sub[0][0]
        total = 0
        for j in range(k):
            minor = [row[:j] + row[j + 1:] for row in sub[1:]]
            term = sub[0][j] * det(minor)
            total += term if j % 2 == 0 else -term
        return total

    chain = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows_idx in combinations(range(m), k):
            for cols_idx in combinations(range(n), k):
                sub = [[mat[i][j] for j in cols_idx] for i in rows_idx]
                g = gcd(g, det(sub))
        if g == 0:
            break
        chain.append(g // prev)
        prev = g
    chain += [0] * (min(m, n) - len(chain))
    return chain


def random_int_matrix(rng: random.Random, rows: int, cols: int, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def random_permutation_matrix(rng: random.Random, n: int):
    perm = list(range(n))
    rng.shuffle(perm)
    return [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    return [
        [sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a
    ]


# ---------------------------------------------------------------------------
# graphs


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning (fine to ~10
    vertices)."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    deg_g = [g.adj[v].bit_count() for v in range(n)]
    deg_h = [h.adj[v].bit_count() for v in range(n)]
    if sorted(deg_g) != sorted(deg_h):
        return False
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg_g[v] != deg_h[w]:
                continue
            ok = True
            for u in range(v):
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def _graph_invariant(g: Graph):
    """Cheap isomorphism invariant used to bucket candidates before pairwise
    matching."""
    n = g.n
    deg = [g.adj[v].bit_count() for v in range(n)]
    per_vertex = sorted(
        (
            deg[v],
            tuple(sorted(deg[w] for w in range(n) if g.adj[v] >> w & 1)),
            (g.adj[v] | 1 << v).bit_count(),
        )
        for v in range(n)
    )
    triangles = sum(
        (g.adj[u] & g.adj[v]).bit_count()
        for u in range(n)
        for v in range(u + 1, n)
        if g.adj[u] >> v & 1
    )
    return (n, g.edge_count(), triangles, tuple(per_vertex))


# Graphs on n unlabeled vertices, 1 <= n <= 8 (OEIS A000088).
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_GRAPH_COUNTS = {8: 11117}


def all_graphs_up_to_iso(n: int) -> list:
    """All graphs on n vertices up to isomorphism, by vertex extension with
    invariant buckets and pairwise matching.  Counts are asserted against
    the known sequence at every level."""
    levels = [[Graph(1, (0,))]]
    for size in range(2, n + 1):
        buckets: dict = {}
        for base in levels[-1]:
            for mask in range(1 << (size - 1)):
                adj = [a | ((mask >> v & 1) << (size - 1)) for v, a in enumerate(base.adj)]
                adj.append(mask)
                g = Graph(size, adj)
                key = _graph_invariant(g)
                bucket = buckets.setdefault(key, [])
                if not any(are_isomorphic(g, other) for other in bucket):
                    bucket.append(g)
        level = [g for bucket in buckets.values() for g in bucket]
        if GRAPH_COUNTS.get(size) is not None:
            assert len(level) == GRAPH_COUNTS[size], (
                f"enumeration of {size}-vertex graphs found {len(level)}"
            )
        levels.append(level)
    return levels[n - 1]


def connected_graphs_up_to_iso(n: int) -> list:
    return [g for g in all_graphs_up_to_iso(n) if is_connected(g)]


def connected_8_vertex_file() -> Path:
    """Path of the graph6 corpus of all connected 8-vertex graphs, building
    and caching it on first use."""
    from ramat.graphs import graph6_encode

    DATA_DIR.mkdir(exist_ok=True)
    path = DATA_DIR / "connected8.g6"
    if path.exists():
        return path
    graphs = connected_graphs_up_to_iso(8)
    assert len(graphs) == CONNECTED_GRAPH_COUNTS[8]
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
    return path
