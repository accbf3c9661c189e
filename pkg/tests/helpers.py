"""Shared test utilities: independent oracles, matrix builders, generators.

The determinant/cycle oracles here deliberately avoid the library's code
paths (cofactor expansion and Fraction-based Gaussian elimination instead
of fraction-free elimination; subset enumeration instead of ear peeling)
so the tests cross-validate rather than echo the implementation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from finitype import SquareIntMatrix


# ---------------------------------------------------------------------------
# independent determinants

def cofactor_det(rows) -> int:
    """Textbook cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def cofactor_leading_minors(rows) -> list[int]:
    return [cofactor_det([row[:k] for row in rows[:k]]) for k in range(1, len(rows) + 1)]


def fraction_gauss_det(rows) -> Fraction:
    """Gaussian elimination over Fraction with partial pivoting."""
    n = len(rows)
    a = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


def independent_leading_minor(rows, k: int) -> int:
    """Minor of order k via cofactor (small) or rational elimination (large)."""
    block = [row[:k] for row in rows[:k]]
    if k <= 7:
        return cofactor_det(block)
    value = fraction_gauss_det(block)
    assert value.denominator == 1
    return value.numerator


# ---------------------------------------------------------------------------
# independent chordless-cycle enumeration

def canonical_undirected(walk) -> tuple[int, ...]:
    """Rotate min-first, then run toward the smaller of its two neighbors."""
    walk = list(walk)
    start = walk.index(min(walk))
    rotated = walk[start:] + walk[:start]
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def brute_chordless_cycles(n: int, edges) -> set[tuple[int, ...]]:
    """Chordless cycles = vertex subsets inducing a connected 2-regular graph."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cycles = set()
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            inside = set(subset)
            if any(len(adj[v] & inside) != 2 for v in subset):
                continue
            # walk the induced cycle to check connectivity and get the order
            start = subset[0]
            order = [start]
            prev, cur = None, start
            while True:
                nxt = next(x for x in adj[cur] & inside if x != prev)
                if nxt == start:
                    break
                order.append(nxt)
                prev, cur = cur, nxt
            if len(order) == size:
                cycles.add(canonical_undirected(order))
    return cycles


def walk_is_cyclically_oriented(arcs: set[tuple[int, int]], walk) -> bool:
    t = len(walk)
    forward = sum(1 for i in range(t) if (walk[i], walk[(i + 1) % t]) in arcs)
    backward = sum(1 for i in range(t) if (walk[(i + 1) % t], walk[i]) in arcs)
    return forward + backward == t and (forward == t or backward == t)


# ---------------------------------------------------------------------------
# matrix builders (0-based; arc (i, j) means b_ij > 0)

def from_arcs(n: int, arcs: dict) -> SquareIntMatrix:
    """Arcs map (i, j) to a weight w (b_ij = w = -b_ji) or a pair (a, c)
    meaning b_ij = a, b_ji = -c."""
    rows = [[0] * n for _ in range(n)]
    for (i, j), w in arcs.items():
        a, c = w if isinstance(w, tuple) else (w, w)
        rows[i][j] = a
        rows[j][i] = -c
    return SquareIntMatrix.from_rows(rows)


def a_path(n: int, mask: int = 0) -> SquareIntMatrix:
    """Type A path; bit i of mask reverses the arc between i and i+1."""
    arcs = {}
    for i in range(n - 1):
        if mask >> i & 1:
            arcs[(i + 1, i)] = 1
        else:
            arcs[(i, i + 1)] = 1
    return from_arcs(n, arcs)


def bc_path(n: int, heavy_first: bool) -> SquareIntMatrix:
    """Type B/C path: unit arcs plus one (1,2) or (2,1) pair at the end."""
    arcs = {(i, i + 1): 1 for i in range(n - 2)}
    arcs[(n - 2, n - 1)] = (2, 1) if heavy_first else (1, 2)
    return from_arcs(n, arcs)


def d_fork(n: int) -> SquareIntMatrix:
    """Type D: path on 0..n-3 with two extra leaves on vertex n-3."""
    arcs = {(i, i + 1): 1 for i in range(n - 3)}
    arcs[(n - 3, n - 2)] = 1
    arcs[(n - 3, n - 1)] = 1
    return from_arcs(n, arcs)


def g2() -> SquareIntMatrix:
    return SquareIntMatrix.from_rows([[0, 1], [-3, 0]])


def markov() -> SquareIntMatrix:
    return SquareIntMatrix.from_rows([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def alternating_square() -> SquareIntMatrix:
    return from_arcs(4, {(0, 1): 1, (2, 1): 1, (2, 3): 1, (0, 3): 1})


def cyclic_cycle(n: int) -> SquareIntMatrix:
    arcs = {(i, (i + 1) % n): 1 for i in range(n)}
    return from_arcs(n, arcs)


def cyclic_triangle() -> SquareIntMatrix:
    return cyclic_cycle(3)


# ---------------------------------------------------------------------------
# random generators (seeded by the caller)

PAIR_OPTIONS = [(0, 0)] + [
    (a, -b) for a in (1, 2) for b in (1, 2)
] + [(-a, b) for a in (1, 2) for b in (1, 2)]


def random_grid_rows(rng: random.Random, n: int) -> list[list[int]]:
    """Uniform over the sign/weight grid with |entries| <= 2 (may fail the
    skew-symmetrizability filter; callers reject and retry)."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j], rows[j][i] = rng.choice(PAIR_OPTIONS)
    return rows


def random_skew_rows(rng: random.Random, n: int, max_x: int = 2, max_d: int = 3):
    """Always-valid skew-symmetrizable matrix: b_ij = x_ij * d_j and
    b_ji = -x_ij * d_i makes diag(d) * B skew-symmetric by construction."""
    d = [rng.randint(1, max_d) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-max_x, max_x)
            rows[i][j] = x * d[j]
            rows[j][i] = -x * d[i]
    return rows, d


def random_cyclically_oriented_arcs(
    rng: random.Random, max_vertices: int = 12, asym_weights: bool = False
) -> tuple[int, dict]:
    """Random cyclically oriented quiver, grown by gluing cycles along
    single edges (every new cycle oriented cyclically) plus bridge edges.

    Returns (n, arcs) in the ``from_arcs`` format.  Cycle edges keep
    symmetric weight pairs so the symmetrizer stays consistent around
    cycles; asymmetric pairs, when enabled, go on bridges or on a
    compensated (2,1)/(1,2) pair of fresh cycle edges whose ratios cancel.
    """
    arcs: dict = {}
    sym_edges: list[tuple[int, int]] = []

    def add_arc(u, v, w=None):
        if w is None:
            w = rng.choice((1, 1, 1, 2))
        arcs[(u, v)] = (w, w)
        sym_edges.append((u, v))

    def add_bridge(u, v):
        if asym_weights and rng.random() < 0.4:
            arcs[(u, v)] = (rng.randint(1, 2), rng.randint(1, 3))
        else:
            add_arc(u, v)

    if rng.random() < 0.3:
        add_bridge(0, 1)
        n = 2
    else:
        t = rng.randint(3, min(5, max_vertices))
        for i in range(t - 1):
            add_arc(i, i + 1)
        add_arc(t - 1, 0)
        n = t

    target = rng.randint(n, max_vertices)
    while n < target:
        if rng.random() < 0.45 and sym_edges:
            u, v = rng.choice(sym_edges)  # glue a new cycle along arc u -> v
            k = rng.randint(1, min(3, target - n))
            fresh = list(range(n, n + k))
            n += k
            # orient the new cycle u -> v -> fresh[-1] -> ... -> fresh[0] -> u
            new_edges = [(v, fresh[-1])]
            new_edges += [(fresh[i + 1], fresh[i]) for i in range(k - 2, -1, -1)]
            new_edges += [(fresh[0], u)]
            for e in new_edges:
                add_arc(*e)
            if asym_weights and k >= 2 and rng.random() < 0.3:
                arcs[new_edges[0]] = (2, 1)
                arcs[new_edges[1]] = (1, 2)
                sym_edges.remove(new_edges[0])
                sym_edges.remove(new_edges[1])
        else:
            x = rng.randrange(n)
            if rng.random() < 0.5:
                add_bridge(x, n)
            else:
                add_bridge(n, x)
            n += 1
    return n, arcs


def arcs_to_arcset(arcs: dict) -> set[tuple[int, int]]:
    return set(arcs.keys())
