"""Desk-scale finite-group engine for verifying graph-power claims directly.

Groups are multiplication tables over element indices; all laws are checked
at construction.  Graph powers, matrix powers, and bracket subgroups are
enumerated by breadth-first closure over generator tuples, with a hard
element budget: a closure that might not fit is refused up front, and
partial enumerations are never returned.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import lcm

from .graphs import Graph
from .intlin import IntMatrix

__all__ = [
    "FiniteGroup",
    "BudgetExceededError",
    "heisenberg",
    "dihedral",
    "commutator_subgroup",
    "graph_power",
    "matrix_power",
    "is_G_RA",
    "comm_b",
    "tuple_subgroup_order_histogram",
    "enumerated_commutator_order",
    "oracle_record",
]

DEFAULT_CAP = 10 ** 7


class BudgetExceededError(RuntimeError):
    """The requested closure could exceed the element budget."""


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    order: int
    table: tuple  # order x order element indices
    identity: int
    inverse: tuple
    generators: tuple
    labels: tuple

    @classmethod
    def from_table(cls, name, table, generators, labels=None) -> "FiniteGroup":
        table = tuple(tuple(int(x) for x in row) for row in table)
        order = len(table)
        if any(len(row) != order for row in table):
            raise ValueError("multiplication table must be square")
        if any(not 0 <= x < order for row in table for x in row):
            raise ValueError("table entry out of range")
        identity = None
        for e in range(order):
            if all(table[e][x] == x == table[x][e] for x in range(order)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        inverse = [None] * order
        for a in range(order):
            for b in range(order):
                if table[a][b] == identity and table[b][a] == identity:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise ValueError(f"element {a} has no inverse")
        for a in range(order):
            ta = table[a]
            for b in range(order):
                tab = ta[b]
                tb = table[b]
                for c in range(order):
                    if table[tab][c] != ta[tb[c]]:
                        raise ValueError("multiplication is not associative")
        if labels is None:
            labels = tuple(str(i) for i in range(order))
        return cls(
            name=name,
            order=order,
            table=table,
            identity=identity,
            inverse=tuple(inverse),
            generators=tuple(generators),
            labels=tuple(labels),
        )

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.table[out][base]
            base = self.table[base][base]
            k >>= 1
        return out

    def element_order(self, a: int) -> int:
        x = a
        n = 1
        while x != self.identity:
            x = self.table[x][a]
            n += 1
        return n

    def commutator(self, a: int, b: int) -> int:
        t = self.table
        return t[t[t[self.inverse[a]][self.inverse[b]]][a]][b]

    def closure(self, seed) -> frozenset:
        """Subgroup generated by the given element indices."""
        gens = sorted(set(seed))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def subgroup(self, elements, name=None) -> "FiniteGroup":
        """The given closed element set as a group in its own right."""
        elems = sorted(elements)
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[self.table[a][b]] for b in elems] for a in elems]
        gens = tuple(i for i in range(len(elems)) if elems[i] != self.identity)
        return FiniteGroup.from_table(
            name or f"{self.name}-subgroup",
            table,
            gens or (0,),
            labels=tuple(self.labels[e] for e in elems),
        )


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/pZ; order p^3, with a central
    commutator subgroup of order p."""
    from .intlin import _is_prime

    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")

    def idx(a, b, c):
        return (a * p + b) * p + c

    order = p ** 3
    table = [[0] * order for _ in range(order)]
    for a1 in range(p):
        for b1 in range(p):
            for c1 in range(p):
                i = idx(a1, b1, c1)
                for a2 in range(p):
                    for b2 in range(p):
                        for c2 in range(p):
                            j = idx(a2, b2, c2)
                            table[i][j] = idx(
                                (a1 + a2) % p,
                                (b1 + b2) % p,
                                (c1 + c2 + a1 * b2) % p,
                            )
    labels = tuple(
        f"({a},{b},{c})" for a in range(p) for b in range(p) for c in range(p)
    )
    return FiniteGroup.from_table(
        f"heisenberg({p})",
        table,
        generators=(idx(1, 0, 0), idx(0, 1, 0)),
        labels=labels,
    )


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even, >= 4) order: rotations r^i and
    reflections r^i s with s r = r^-1 s."""
    if order < 4 or order % 2:
        raise ValueError("dihedral order must be even and >= 4")
    n = order // 2

    def idx(i, j):
        return i + n * j

    table = [[0] * order for _ in range(order)]
    for i1 in range(n):
        for j1 in range(2):
            a = idx(i1, j1)
            for i2 in range(n):
                for j2 in range(2):
                    i = (i1 - i2) % n if j1 else (i1 + i2) % n
                    table[a][idx(i2, j2)] = idx(i, j1 ^ j2)
    labels = tuple(
        ("e" if (i, j) == (0, 0) else f"r{i}" + ("s" if j else ""))
        for j in range(2)
        for i in range(n)
    )
    return FiniteGroup.from_table(
        f"dihedral({order})", table, generators=(idx(1, 0), idx(0, 1)),
        labels=labels,
    )


def commutator_subgroup(g: FiniteGroup) -> frozenset:
    """Element set of [G,G], generated by all commutators."""
    comms = {g.commutator(a, b) for a in range(g.order) for b in range(g.order)}
    return g.closure(comms)


def _check_budget(order: int, n: int, cap: int) -> None:
    if order ** n > cap:
        raise BudgetExceededError(
            f"group^n would allow {order}**{n} tuples, over the cap {cap}"
        )


def _tuple_closure(g: FiniteGroup, gens, n: int) -> frozenset:
    """BFS closure in G^n over the given generator tuples (coordinatewise
    right multiplication); deterministic order for reproducible logs."""
    table = g.table
    ident = (g.identity,) * n
    gens = sorted(set(gens))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for t in gens:
            y = tuple(table[a][b] for a, b in zip(x, t))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def graph_power(g: FiniteGroup, graph: Graph, cap: int = DEFAULT_CAP) -> frozenset:
    """The subgroup of G^n generated by clicks: each group generator placed
    on each closed neighborhood.  (Clicks at one vertex compose
    coordinatewise, so group generators suffice.)"""
    n = graph.n
    _check_budget(g.order, n, cap)
    gens = []
    for s in g.generators:
        for v in graph.vertices():
            mask = graph.closed_mask(v)
            gens.append(
                tuple(s if mask >> j & 1 else g.identity for j in range(n))
            )
    return _tuple_closure(g, gens, n)


def matrix_power(g: FiniteGroup, m: IntMatrix, cap: int = DEFAULT_CAP) -> frozenset:
    """Subgroup of G^cols generated by g^row over the rows of the matrix.

    Every g in G is clicked, not only group generators: for exponent rows
    beyond 0/1 the map g -> g^row is not a homomorphism, and generator
    clicks can generate a proper subgroup (D_8 over [[1,2],[0,4]] is the
    counterexample: generator clicks reach 8 of its 16 elements).
    """
    n = m.cols
    _check_budget(g.order, n, cap)
    gens = []
    for s in range(g.order):
        for row in m.data:
            gens.append(tuple(g.power(s, int(x)) for x in row))
    return _tuple_closure(g, gens, n)


def is_G_RA(g: FiniteGroup, graph: Graph, cap: int = DEFAULT_CAP) -> bool:
    """Whether every single-vertex placement of a commutator lies in the
    graph power, i.e. [G,G]^n is inside it."""
    power = graph_power(g, graph, cap)
    comm = commutator_subgroup(g)
    n = graph.n
    ident = g.identity
    for c in comm:
        if c == ident:
            continue
        for v in range(n):
            t = tuple(c if j == v else ident for j in range(n))
            if t not in power:
                return False
    return True


def comm_b(g: FiniteGroup, graph: Graph, cap: int = DEFAULT_CAP) -> frozenset:
    """Subgroup generated by all bracket clicks [g^v, h^w]; such a bracket
    places the commutator [g,h] on N[v] & N[w]."""
    n = graph.n
    _check_budget(g.order, n, cap)
    comms = {
        g.commutator(a, b) for a in range(g.order) for b in range(g.order)
    }
    comms.discard(g.identity)
    masks = set()
    for v in graph.vertices():
        for w in graph.vertices():
            masks.add(graph.closed_mask(v) & graph.closed_mask(w))
    gens = []
    for c in comms:
        for mask in masks:
            gens.append(
                tuple(c if mask >> j & 1 else g.identity for j in range(n))
            )
    return _tuple_closure(g, gens, n)


def tuple_subgroup_order_histogram(g: FiniteGroup, elements) -> dict:
    """Element-order histogram of an enumerated tuple subgroup (the order of
    a tuple is the lcm of its coordinates' orders)."""
    orders = [0] * g.order
    for a in range(g.order):
        orders[a] = g.element_order(a)
    hist = Counter(lcm(*(orders[a] for a in t)) for t in elements)
    return dict(sorted(hist.items()))


def enumerated_commutator_order(g: FiniteGroup, elements) -> int:
    """Order of the commutator subgroup of an enumerated tuple subgroup;
    used with the order histogram as an isomorphism-type fingerprint.

    Pairwise enumeration is quadratic, so this refuses sets past 10^5
    elements rather than stall."""
    elems = list(elements)
    if len(elems) > 10 ** 5:
        raise BudgetExceededError(
            f"commutator enumeration over {len(elems)} elements is too large"
        )
    n = len(elems[0])
    table = g.table
    inv = g.inverse

    def tmul(x, y):
        return tuple(table[a][b] for a, b in zip(x, y))

    def tinv(x):
        return tuple(inv[a] for a in x)

    comms = set()
    for x in elems:
        xi = tinv(x)
        for y in elems:
            comms.add(tmul(tmul(tmul(xi, tinv(y)), x), y))
    gens = sorted(comms)
    ident = (g.identity,) * n
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for t in gens:
            y = tmul(x, t)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


def oracle_record(
    g: FiniteGroup, graph: Graph, cap: int = DEFAULT_CAP, descriptor: str = ""
) -> dict:
    """Full verdict for one (group, graph) pair, JSON-ready."""
    power = graph_power(g, graph, cap)
    comm = commutator_subgroup(g)
    n = graph.n
    inter = sum(1 for t in power if all(a in comm for a in t))
    bracket = comm_b(g, graph, cap)
    ident = g.identity
    ok = True
    for c in comm:
        if c == ident:
            continue
        for v in range(n):
            t = tuple(c if j == v else ident for j in range(n))
            if t not in power:
                ok = False
                break
        if not ok:
            break
    return {
        "group": g.name,
        "graph": descriptor,
        "order_G_Gamma": len(power),
        "is_G_RA": ok,
        "intersection_order": inter,
        "comm_b_order": len(bracket),
    }
