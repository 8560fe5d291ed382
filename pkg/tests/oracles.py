"""Independent reference implementations the test suite checks against.

Everything here deliberately avoids the library's own code paths: ranks by
naive rational elimination, zero forcing by trying all subsets with a
set-based closure, red moves by materializing the edge-count maps of the
modified general graphs, spectra by numpy.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def naive_rational_rank(rows):
    """Textbook Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def set_closure(g, blue, order=None):
    """Set-based closure; optional vertex scan order to exercise
    order-independence."""
    blue = set(blue)
    scan = list(order) if order is not None else list(range(g.n))
    while True:
        forced = None
        for v in scan:
            if v not in blue:
                continue
            white = [w for w in g.neighbors(v) if w not in blue]
            if len(white) == 1:
                forced = white[0]
                break
        if forced is None:
            return blue
        blue.add(forced)


def brute_zero_forcing(g):
    """Smallest zero forcing set by trying every subset, size by size."""
    full = set(range(g.n))
    for s in range(1, g.n + 1):
        for cand in itertools.combinations(range(g.n), s):
            if set_closure(g, cand) == full:
                return s, cand
    raise AssertionError("unreachable: V(G) always forces")


def laplace_determinant(rows):
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    det = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][t] for t in range(n) if t != j] for i in range(1, n)]
        det += (-1) ** j * Fraction(rows[0][j]) * laplace_determinant(minor)
    return det


# ---------------------------------------------------------------------------
# multigraph semantics of the red color change rule


def red_move_semantics(adj_rows, n, u, v, x_multiset, y_multiset, k):
    """Materialize the edge-count map of the graph after adding the X-step
    neighborhoods at v and subtracting the Y neighborhoods, then compare the
    neighborhood of v against the (k+1)-fold neighborhood of u.

    The diagonal cell of the edge-count map counts loops (a loop contributes
    one copy of the vertex to its own neighborhood). Deletions remove one
    v-incident edge per member of each subtracted vertex's original
    neighborhood; they require both the per-vertex containment and the
    cumulative feasibility in the augmented map.
    """
    e1 = [row[:] for row in adj_rows]
    for x, cx in x_multiset.items():
        for w in range(n):
            m = adj_rows[x][w] * cx
            if not m:
                continue
            if w == v:
                e1[v][v] += m
            else:
                e1[v][w] += m
                e1[w][v] += m
    total = [0] * n
    for y, cy in y_multiset.items():
        dele = [adj_rows[y][w] * cy for w in range(n)]
        for w in range(n):
            if dele[w] > e1[v][w]:
                return False
            total[w] += dele[w]
    for w in range(n):
        if total[w] > e1[v][w]:
            return False
    final_v = [e1[v][w] - total[w] for w in range(n)]
    target = [(k + 1) * adj_rows[u][w] for w in range(n)]
    return final_v == target


def all_small_moves(n, max_mult=2, max_k=2):
    """Every (u, v, X, Y, k) with |X|, |Y| <= max_mult and k <= max_k."""
    multis = [{}]
    multis += [{i: 1} for i in range(n)]
    for a, b in itertools.combinations_with_replacement(range(n), 2):
        ms = {a: 1}
        ms[b] = ms.get(b, 0) + 1
        multis.append(ms)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for x in multis:
                if u in x:
                    continue
                for y in multis:
                    if u in y:
                        continue
                    for k in range(max_k + 1):
                        yield u, v, x, y, k
