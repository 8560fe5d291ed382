"""The red color-change calculus.

A white vertex u turns red when there are a white vertex v, multisets X and Y
of white vertices (u excluded from all of them) and an integer k >= 0 with

    (k+1) * row(u) = row(v) + sum over X of row(x) - sum over Y of row(y)

over the integer rows of the adjacency matrix. Moves are verified by this
row equation directly. Certificates are sequences of moves replayed against
a growing red set; the maximum number of sequentially valid moves equals the
rational nullity of the adjacency matrix, and the constructive direction is
implemented here: express each non-basis row as a rational combination of a
row basis, clear denominators by the lcm, and split the integer coefficients
by sign into the X / Y multisets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .linalg import QQ, adjacency_matrix

COUNT_GUARD = 10**6


def _as_multiset(m):
    out = {}
    if m is None:
        return out
    if isinstance(m, dict):
        items = m.items()
    else:
        items = ((v, 1) for v in m)
    for v, c in items:
        c = int(c)
        if c < 0:
            raise ValueError("multiset counts must be nonnegative")
        if c:
            out[int(v)] = out.get(int(v), 0) + c
    return out


@dataclass(frozen=True)
class RedMove:
    """Color target u red via witness v, multisets X (added) / Y (subtracted)
    and repetition count k."""

    u: int
    v: int
    x: tuple = ()  # ((vertex, count), ...)
    y: tuple = ()
    k: int = 0

    @classmethod
    def make(cls, u, v, x=None, y=None, k=0):
        if k < 0:
            raise ValueError("k must be nonnegative")
        xs = _as_multiset(x)
        ys = _as_multiset(y)
        if any(c > COUNT_GUARD for c in xs.values()) or any(
            c > COUNT_GUARD for c in ys.values()
        ):
            raise RuntimeError(
                f"multiset count exceeds the guard {COUNT_GUARD}; "
                "the clearing denominator blew up"
            )
        return cls(int(u), int(v), tuple(sorted(xs.items())), tuple(sorted(ys.items())), int(k))

    @property
    def x_multiset(self):
        return dict(self.x)

    @property
    def y_multiset(self):
        return dict(self.y)

    def participants(self):
        return {self.v} | {v for v, _ in self.x} | {v for v, _ in self.y}

    def to_json_obj(self):
        return {
            "u": self.u,
            "v": self.v,
            "X": {str(v): c for v, c in self.x},
            "Y": {str(v): c for v, c in self.y},
            "k": self.k,
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls.make(
            obj["u"],
            obj["v"],
            {int(v): c for v, c in obj.get("X", {}).items()},
            {int(v): c for v, c in obj.get("Y", {}).items()},
            obj.get("k", 0),
        )


class RedCertificateError(ValueError):
    """A move in a certificate failed; .index is the first failing position."""

    def __init__(self, index, message):
        super().__init__(f"move {index}: {message}")
        self.index = index


def verify_red_move(g, red_so_far, move):
    """Check the integer row equation for one move.

    Structural violations (a participant already red, or the target inside
    its own witness data) raise; an equation mismatch returns False.
    """
    red = set(red_so_far)
    parts = move.participants()
    if move.u in parts:
        raise ValueError("target appears in its own move data")
    for v in parts | {move.u}:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        if v in red:
            raise ValueError(f"participant {v} is already red")
    rows = g.adjacency_rows()
    ku = move.k + 1
    ru = rows[move.u]
    rv = rows[move.v]
    for w in range(g.n):
        rhs = rv[w]
        for x, c in move.x:
            rhs += c * rows[x][w]
        for y, c in move.y:
            rhs -= c * rows[y][w]
        if ku * ru[w] != rhs:
            return False
    return True


def apply_red_sequence(g, certificate):
    """Replay a certificate; returns the ordered red set. Raises
    RedCertificateError at the first move that fails (equation or
    whiteness)."""
    red = []
    red_set = set()
    for idx, move in enumerate(certificate):
        try:
            ok = verify_red_move(g, red_set, move)
        except ValueError as exc:
            raise RedCertificateError(idx, str(exc)) from None
        if not ok:
            raise RedCertificateError(idx, "row equation does not hold")
        if move.u in red_set:
            raise RedCertificateError(idx, f"target {move.u} is already red")
        red.append(move.u)
        red_set.add(move.u)
    return red


def graph_nullity(g):
    """Exact rational nullity of the adjacency matrix."""
    return adjacency_matrix(g, 0, QQ).rank_nullity()[1]


def _row_basis(rows):
    """Lexicographically first maximal independent set of rows, plus the
    running reduced rows for later coefficient solves."""
    n = len(rows)
    basis = []  # vertex indices
    reduced = []  # echelon rows (Fractions), aligned with basis order
    for v in range(n):
        vec = [Fraction(x) for x in rows[v]]
        coeffs = []
        for brow in reduced:
            pc = next(i for i, x in enumerate(brow) if x)
            f = vec[pc] / brow[pc]
            coeffs.append(f)
            if f:
                vec = [a - f * b for a, b in zip(vec, brow)]
        if any(vec):
            basis.append(v)
            reduced.append(vec)
    return basis


def _express_in_basis(rows, basis, target):
    """Rational coefficients writing rows[target] over the basis rows, via
    exact elimination on the stacked system."""
    cols = len(rows[0])
    aug = [[Fraction(rows[b][c]) for b in basis] for c in range(cols)]
    rhs = [Fraction(rows[target][c]) for c in range(cols)]
    nvars = len(basis)
    # forward elimination with partial structure (first nonzero pivot)
    piv_for_var = {}
    r = 0
    for var in range(nvars):
        pr = None
        for i in range(r, cols):
            if aug[i][var]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        rhs[r], rhs[pr] = rhs[pr], rhs[r]
        pv = aug[r][var]
        aug[r] = [x / pv for x in aug[r]]
        rhs[r] = rhs[r] / pv
        for i in range(cols):
            if i != r and aug[i][var]:
                f = aug[i][var]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        piv_for_var[var] = r
        r += 1
    coeffs = [Fraction(0)] * nvars
    for var, pr in piv_for_var.items():
        coeffs[var] = rhs[pr]
    # consistency: remaining rows must have zero rhs
    for i in range(cols):
        if i not in piv_for_var.values() and all(not x for x in aug[i]) and rhs[i]:
            raise ArithmeticError("target row is not in the basis span")
    return coeffs


def derive_red_certificates(g):
    """Certificate with one verifying move per non-basis adjacency row.

    For each non-basis vertex, its row is written as a rational combination
    of the basis rows; multiplying through by the lcm d of the denominators
    gives integer weights c_i * s_i, the smallest-index positively weighted
    basis vertex becomes the witness v (with weight reduced by one inside X),
    the other positive weights fill X, the negated negative weights fill Y,
    and k = d - 1. A zero row (isolated vertex) is handled by the cancelling
    move (v, {}, {v}, 0) against any basis vertex, which stays white
    throughout since targets are never basis vertices. An edgeless graph has
    no basis vertex to lean on: its last vertex is unreachable by any move
    (every move needs a distinct white witness) and the certificate honestly
    stops one short of the nullity there.
    """
    rows = g.adjacency_rows()
    basis = _row_basis(rows)
    basis_set = set(basis)
    targets = [v for v in range(g.n) if v not in basis_set]
    moves = []
    if not basis:
        # edgeless: all rows zero; twin moves against the last vertex
        for u in targets[:-1]:
            moves.append(RedMove.make(u, targets[-1]))
        return tuple(moves)
    for u in targets:
        if not any(rows[u]):
            moves.append(RedMove.make(u, basis[0], None, {basis[0]: 1}, 0))
            continue
        coeffs = _express_in_basis(rows, basis, u)
        d = 1
        for c in coeffs:
            d = d * c.denominator // gcd(d, c.denominator)
        weights = [int(c * d) for c in coeffs]
        pos = [(basis[i], w) for i, w in enumerate(weights) if w > 0]
        neg = [(basis[i], -w) for i, w in enumerate(weights) if w < 0]
        if not pos:
            raise ArithmeticError(
                "a nonzero adjacency row decomposed with no positive weight"
            )
        v, wv = pos[0]
        x = {b: w for b, w in pos[1:]}
        if wv > 1:
            x[v] = wv - 1
        y = dict(neg)
        moves.append(RedMove.make(u, v, x, y, d - 1))
    return tuple(moves)


def bipartite_doubling_bound(g, side, certificate):
    """Replay a one-sided certificate on a balanced bipartite graph and
    return 2 * |red set|, checked against the exact nullity.

    Hypotheses verified: the given side and its complement are both
    independent sets of equal size, every move's target lies in the side,
    and every move's witness data stays inside the side.
    """
    side = frozenset(side)
    other = frozenset(range(g.n)) - side
    if len(side) != len(other):
        raise ValueError("the two sides must have equal size")
    for u, v in g.edges:
        if (u in side) == (v in side):
            raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
    red = []
    red_set = set()
    for idx, move in enumerate(certificate):
        if move.u not in side:
            raise RedCertificateError(idx, f"target {move.u} escapes the side")
        if not move.participants() <= side:
            raise RedCertificateError(idx, "move data escapes the side")
        try:
            ok = verify_red_move(g, red_set, move)
        except ValueError as exc:
            raise RedCertificateError(idx, str(exc)) from None
        if not ok:
            raise RedCertificateError(idx, "row equation does not hold")
        red.append(move.u)
        red_set.add(move.u)
    bound = 2 * len(red)
    nullity = graph_nullity(g)
    if bound > nullity:
        raise AssertionError(
            f"doubled red set {bound} exceeds the nullity {nullity}; "
            "a verified certificate cannot do that"
        )
    return bound


# ---------------------------------------------------------------------------
# the explicit certificates used for the two worked families


def aztec_diagonal_certificate(r):
    """One move per anti-diagonal D_l of the order-r diamond graph, all of it
    inside one parity class: along each diagonal the last cell is colored
    using the second-to-last as witness and the earlier cells split into
    X / Y by alternating sign."""
    from .graphs import aztec_diamond

    g = aztec_diamond(r)
    moves = []
    for ell in range(r):
        cells = [(i + ell, r + 2 + ell - i) for i in range(1, r + 2)]
        idx = [g.vertex_of_label(c) for c in cells]
        u = idx[r]  # last cell (i = r+1)
        v = idx[r - 1]  # i = r
        x = {}
        y = {}
        for i in range(1, r):  # cells with i < r
            if (r - i) % 2 == 0:
                x[idx[i - 1]] = 1
            else:
                y[idx[i - 1]] = 1
        moves.append(RedMove.make(u, v, x, y, 0))
    return g, moves


def circulant_half_certificate(n):
    """The n/4 twin moves plus the alternating-sign move coloring vertex n/2
    in the circulant with connection set {1, n/2 - 1}, n divisible by 8. All
    targets and witnesses are even (one side of the bipartition)."""
    if n % 8:
        raise ValueError("needs n divisible by 8")
    moves = [RedMove.make(v, v + n // 2) for v in range(0, n // 2 - 1, 2)]
    x = {}
    y = {}
    for j, w in enumerate(range(n // 2 + 4, n - 1, 2)):
        if j % 2 == 0:
            y[w] = 1
        else:
            x[w] = 1
    moves.append(RedMove.make(n // 2, n // 2 + 2, x, y, 0))
    return moves
