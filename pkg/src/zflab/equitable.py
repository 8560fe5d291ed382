"""Equitable partitions, divisor matrices, automorphism orbits, and the
root-of-unity block decomposition of a compatible matrix.

A partition V_0, ..., V_k of V(G) is equitable when every vertex of V_i has
the same number b_ij of neighbors in V_j; the matrix [b_ij] is the divisor
matrix, and its spectrum embeds in the spectrum of A(G). A uniform
automorphism (all orbits of one size k) refines this: slicing a compatible
matrix along the powers of the automorphism applied to a transversal and
combining the slices with k-th root of unity weights block-diagonalizes it.

Graphs tagged "half-step" (circulants whose connection set contains n/2) are
rejected by the operations here; the small-quotient divisor comparison those
tags exist for is not valid on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import math

from .linalg import (
    QI,
    QQ,
    QW,
    ExactMatrix,
    QuadRational,
    Spectrum,
    adjacency_matrix,
    root_of_unity,
    spectrum,
)


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint blocks covering 0..n-1; b is the block-to-block
    neighbor count table once verified."""

    blocks: tuple  # ((v, ...), ...)
    b: tuple | None = None

    @property
    def size(self):
        return len(self.blocks)

    def block_of(self):
        out = {}
        for i, blk in enumerate(self.blocks):
            for v in blk:
                out[v] = i
        return out


def _check_partition(g, blocks):
    seen = set()
    for blk in blocks:
        if not blk:
            raise ValueError("empty block")
        for v in blk:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears twice")
            seen.add(v)
    if len(seen) != g.n:
        raise ValueError("blocks do not cover the vertex set")


def _reject_half_step(g):
    if "half-step" in g.flags:
        raise ValueError(
            "graph is tagged half-step (connection set contains n/2); "
            "equitable operations are not supported on it"
        )


def is_equitable(g, partition):
    """(True, b) when the neighbor counts are block-constant, else
    (False, (v, j)) naming a vertex and block index that break constancy."""
    _reject_half_step(g)
    blocks = tuple(tuple(blk) for blk in (
        partition.blocks if isinstance(partition, Partition) else partition
    ))
    _check_partition(g, blocks)
    index = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            index[v] = i
    b = []
    for i, blk in enumerate(blocks):
        counts0 = None
        for v in blk:
            counts = [0] * len(blocks)
            for w in g.neighbors(v):
                counts[index[w]] += 1
            if counts0 is None:
                counts0 = counts
            elif counts != counts0:
                j = next(t for t in range(len(blocks)) if counts[t] != counts0[t])
                return False, (v, j)
        b.append(tuple(counts0))
    return True, tuple(b)


def coarsest_equitable(g, initial=None):
    """Refine the initial partition (default: one block) by neighbor-count
    signatures until stable. The result refines the input, is equitable, and
    is the coarsest such refinement; blocks are ordered by least vertex."""
    _reject_half_step(g)
    if initial is None:
        blocks = [tuple(range(g.n))]
    else:
        blocks = [tuple(blk) for blk in (
            initial.blocks if isinstance(initial, Partition) else initial
        )]
        _check_partition(g, blocks)
    while True:
        index = {}
        for i, blk in enumerate(blocks):
            for v in blk:
                index[v] = i
        new_blocks = []
        changed = False
        for blk in blocks:
            sig = {}
            for v in blk:
                counts = [0] * len(blocks)
                for w in g.neighbors(v):
                    counts[index[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            groups = sorted(sig.values(), key=min)
            if len(groups) > 1:
                changed = True
            new_blocks.extend(tuple(sorted(grp)) for grp in groups)
        blocks = sorted(new_blocks, key=min)
        if not changed:
            break
    ok, b = is_equitable(g, blocks)
    assert ok
    return Partition(tuple(blocks), b)


def divisor_matrix(g, partition):
    """Integer divisor matrix [b_ij] of an equitable partition."""
    ok, data = is_equitable(g, partition)
    if not ok:
        v, j = data
        raise ValueError(f"partition is not equitable: vertex {v} vs block {j}")
    return ExactMatrix(QQ, [list(row) for row in data])


def divisor_spectrum(g, partition, tol=1e-10):
    """Eigenvalues of the divisor matrix via the similarity that symmetrizes
    it: scaling block i by sqrt(|V_i|) turns [b_ij] into the symmetric
    matrix [b_ij * sqrt(|V_i| / |V_j|)] with the same spectrum."""
    ok, b = is_equitable(g, partition)
    if not ok:
        raise ValueError("partition is not equitable")
    blocks = partition.blocks if isinstance(partition, Partition) else partition
    sizes = [len(blk) for blk in blocks]
    k = len(sizes)
    sym = [
        [b[i][j] * math.sqrt(sizes[i] / sizes[j]) for j in range(k)]
        for i in range(k)
    ]
    return spectrum(sym, tol)


# ---------------------------------------------------------------------------
# automorphisms and orbit partitions


@dataclass(frozen=True)
class Automorphism:
    perm: tuple
    orbit_size: int | None = None  # set when uniform


def check_automorphism(g, perm):
    """Validate a permutation as a graph automorphism; raises naming a
    violated pair."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of 0..n-1")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != g.has_edge(perm[u], perm[v]):
                raise ValueError(
                    f"pair ({u},{v}) maps to ({perm[u]},{perm[v]}) and changes adjacency"
                )
    return perm


def _cycles(perm):
    n = len(perm)
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        v = perm[s]
        while v != s:
            cyc.append(v)
            seen[v] = True
            v = perm[v]
        cycles.append(tuple(cyc))
    return cycles


def as_automorphism(g, perm):
    perm = check_automorphism(g, perm)
    sizes = {len(c) for c in _cycles(perm)}
    return Automorphism(perm, sizes.pop() if len(sizes) == 1 else None)


def orbit_partition(g, phi):
    """Blocks are the orbits (cycles) of the automorphism, ordered by least
    vertex; the result is always equitable."""
    _reject_half_step(g)
    perm = phi.perm if isinstance(phi, Automorphism) else tuple(phi)
    check_automorphism(g, perm)
    blocks = tuple(
        tuple(sorted(c)) for c in sorted(_cycles(perm), key=min)
    )
    ok, b = is_equitable(g, blocks)
    assert ok, "orbits of an automorphism are always equitable"
    return Partition(blocks, b)


# ---------------------------------------------------------------------------
# the block decomposition


@dataclass(frozen=True)
class Decomposition:
    k: int
    omega: object  # exact root for k in {1,2,3,4,6}, complex float otherwise
    transversals: tuple  # (T_0, ..., T_{k-1}), each a tuple of vertices
    slices: tuple  # rational ExactMatrix A_l = M[T_0, T_l]
    blocks: tuple  # ExactMatrix over Q / Q(i) / Q(w), or complex lists when inexact
    exact: bool

    def block_spectra(self, tol=1e-10):
        return [spectrum(b, tol) for b in self.blocks]


def _block_domain(k):
    if k in (1, 2):
        return QQ
    if k == 4:
        return QI
    if k in (3, 6):
        return QW
    return None


def equitable_decomposition(g_or_matrix, phi, t0=None, graph=None):
    """Slice a compatible matrix along a uniform automorphism and combine
    the slices with k-th root of unity weights.

    Accepts a Graph (its adjacency matrix is used) or a rational ExactMatrix
    plus the graph via `graph=`. The transversal t0 defaults to the least
    vertex of each orbit. Exact block arithmetic for orbit sizes 1, 2, 3, 4
    and 6; other sizes fall back to complex floats with exact=False.
    """
    from .graphs import Graph

    if isinstance(g_or_matrix, Graph):
        g = g_or_matrix
        m = adjacency_matrix(g, 0, QQ)
    else:
        m = g_or_matrix
        if graph is None:
            raise ValueError("pass graph= when supplying a matrix")
        g = graph
        if m.domain != QQ or m.rows != g.n or m.cols != g.n:
            raise ValueError("matrix must be rational and match the graph order")
    _reject_half_step(g)
    perm = phi.perm if isinstance(phi, Automorphism) else tuple(phi)
    check_automorphism(g, perm)
    cycles = sorted(_cycles(perm), key=min)
    sizes = {len(c) for c in cycles}
    if len(sizes) != 1:
        raise ValueError(f"automorphism is not uniform: orbit sizes {sorted(sizes)}")
    k = sizes.pop()
    # compatibility of the matrix with the permutation
    for i in range(g.n):
        for j in range(g.n):
            if m.entry(perm[i], perm[j]) != m.entry(i, j):
                raise ValueError(f"matrix is not compatible at ({i},{j})")
    if t0 is None:
        t0 = tuple(min(c) for c in cycles)
    else:
        t0 = tuple(t0)
        orbit_of = {}
        for idx, c in enumerate(cycles):
            for v in c:
                orbit_of[v] = idx
        hit = [orbit_of[v] for v in t0]
        if len(t0) != len(cycles) or sorted(hit) != list(range(len(cycles))):
            raise ValueError("t0 must contain exactly one vertex per orbit")
    transversals = [t0]
    cur = t0
    for _ in range(k - 1):
        cur = tuple(perm[v] for v in cur)
        transversals.append(cur)
    r = len(t0)
    slices = []
    for ell in range(k):
        tl = transversals[ell]
        slices.append(
            ExactMatrix(QQ, [[m.entry(t0[i], tl[j]) for j in range(r)] for i in range(r)])
        )
    omega = root_of_unity(k)
    domain = _block_domain(k)
    blocks = []
    if domain is not None:
        for j in range(k):
            acc = [[_dom_zero(domain) for _ in range(r)] for _ in range(r)]
            w = _dom_one(domain)
            wj = _dom_pow(omega, j, domain)
            for ell in range(k):
                for a in range(r):
                    row = slices[ell].row(a)
                    for c in range(r):
                        if row[c]:
                            acc[a][c] = acc[a][c] + w * row[c]
                w = w * wj
            blocks.append(ExactMatrix(domain, acc))
        exact = True
    else:
        for j in range(k):
            acc = [[0j] * r for _ in range(r)]
            for ell in range(k):
                w = omega ** (j * ell)
                for a in range(r):
                    row = slices[ell].row(a)
                    for c in range(r):
                        if row[c]:
                            acc[a][c] += w * complex(row[c])
            blocks.append(acc)
        exact = False
    return Decomposition(
        k, omega, tuple(transversals), tuple(slices), tuple(blocks), exact
    )


def _dom_zero(domain):
    if domain == QQ:
        return Fraction(0)
    return QuadRational(0, 0, "i" if domain == QI else "w")


def _dom_one(domain):
    if domain == QQ:
        return Fraction(1)
    return QuadRational(1, 0, "i" if domain == QI else "w")


def _dom_pow(omega, j, domain):
    out = _dom_one(domain)
    base = omega if not isinstance(omega, (int, Fraction)) else _dom_one(domain) * omega
    for _ in range(j):
        out = out * base
    return out


# ---------------------------------------------------------------------------
# the widened-cube nullvector scheme


def verify_ecg_nullvectors(q):
    """Exact check that the four decomposition blocks of the widened cube on
    24q+12 vertices (equal horizontal and vertical ladder width 6q+1) are all
    singular: the three tiled vectors annihilate blocks 0..2 and block 3 is
    the transpose of block 1. Returns True when every check passes."""
    from .graphs import extended_cube

    t = 6 * q + 1
    g = extended_cube(t, t)
    n = g.n
    r = n // 4
    perm = tuple((x + r) % n for x in range(n))
    dec = equitable_decomposition(g, perm)
    if dec.k != 4 or not dec.exact:
        return False
    b0, b1, b2, b3 = dec.blocks

    def qi(a, b=0):
        return QuadRational(a, b, "i")

    tile0 = [qi(1), qi(-2), qi(1)]
    tile1 = [qi(0, 1), qi(1, 1), qi(1)]
    hat1 = [qi(-1), qi(-1, -1), qi(0, -1)]
    tile2 = [qi(1), qi(0), qi(-1)]
    hat2 = [qi(-1), qi(0), qi(1)]

    x0 = tile0 * (2 * q + 1)
    x1 = (tile1 + hat1) * q + tile1
    x2 = (tile2 + hat2) * q + tile2
    if len(x0) != r:
        return False

    def annihilates(block, vec):
        return all(not e for e in block.matvec(vec))

    if not annihilates(b0, x0):
        return False
    if not annihilates(b1, x1):
        return False
    if not annihilates(b2, x2):
        return False
    if b3.data != b1.transpose().data:
        return False
    return True
