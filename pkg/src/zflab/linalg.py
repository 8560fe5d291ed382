"""Dense exact matrices over selectable coefficient domains.

Supported domains: the rationals, prime fields GF(p), and the two quadratic
extensions of the rationals generated by a 4th / 3rd root of unity (enough
for exact root-of-unity block arithmetic with orbit sizes 1, 2, 3, 4, 6).

Rank over the rationals runs fraction-free (Bareiss) on integer rows to keep
intermediate entries polynomially bounded; GF(p) uses modular inverses; the
quadratic extensions use straight exact elimination. A dense Jacobi
eigensolver (cyclic two-sided rotations) provides floating-point spectra of
real symmetric / complex Hermitian matrices for spectrum comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoeffDomain:
    """Coefficient domain tag: "Q", "GF" (with prime p), "QI" (rationals
    adjoined i) or "QW" (rationals adjoined a primitive cube root of unity)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Q", "GF", "QI", "QW"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "GF":
            if self.p is None or self.p >= 2**31 or not is_prime(self.p):
                raise ValueError(f"GF modulus must be a prime < 2^31, got {self.p}")
        elif self.p is not None:
            raise ValueError("only GF takes a modulus")

    def __str__(self):
        return f"GF({self.p})" if self.kind == "GF" else self.kind


QQ = CoeffDomain("Q")
QI = CoeffDomain("QI")
QW = CoeffDomain("QW")


def prime_field(p):
    return CoeffDomain("GF", p)


class QuadRational:
    """Element a + b*g of a quadratic extension of Q.

    kind "i": g*g = -1. kind "w": g is a primitive cube root of unity,
    g*g = -1 - g. Arithmetic is exact via Fractions.
    """

    __slots__ = ("a", "b", "kind")

    def __init__(self, a, b=0, kind="i"):
        if kind not in ("i", "w"):
            raise ValueError("kind must be 'i' or 'w'")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.kind = kind

    def _coerce(self, other):
        if isinstance(other, QuadRational):
            if other.kind != self.kind:
                raise TypeError("mixed extension kinds")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRational(other, 0, self.kind)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRational(self.a + o.a, self.b + o.b, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return QuadRational(-self.a, -self.b, self.kind)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRational(self.a - o.a, self.b - o.b, self.kind)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.kind == "i":
            return QuadRational(
                self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, "i"
            )
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
        return QuadRational(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
            "w",
        )

    __rmul__ = __mul__

    def conjugate(self):
        if self.kind == "i":
            return QuadRational(self.a, -self.b, "i")
        return QuadRational(self.a - self.b, -self.b, "w")

    def norm(self):
        if self.kind == "i":
            return self.a * self.a + self.b * self.b
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero element")
        c = self.conjugate()
        return QuadRational(c.a / n, c.b / n, self.kind)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.kind))

    def to_complex(self):
        if self.kind == "i":
            return complex(self.a) + 1j * complex(self.b)
        w = complex(-0.5, math.sqrt(3) / 2)
        return complex(self.a) + complex(self.b) * w

    def __repr__(self):
        g = "i" if self.kind == "i" else "w"
        return f"({self.a}+{self.b}{g})"


def root_of_unity(k):
    """Primitive k-th root of unity: exact for k in {1, 2, 3, 4, 6},
    complex float otherwise."""
    if k == 1:
        return Fraction(1)
    if k == 2:
        return Fraction(-1)
    if k == 4:
        return QuadRational(0, 1, "i")
    if k == 3:
        return QuadRational(0, 1, "w")
    if k == 6:
        return QuadRational(1, 1, "w")
    return complex(math.cos(2 * math.pi / k), math.sin(2 * math.pi / k))


def _normalize(value, domain):
    if domain.kind == "GF":
        if isinstance(value, Fraction):
            if value.denominator % domain.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return value.numerator * pow(value.denominator, -1, domain.p) % domain.p
        return int(value) % domain.p
    if domain.kind == "Q":
        return Fraction(value)
    kind = "i" if domain.kind == "QI" else "w"
    if isinstance(value, QuadRational):
        if value.kind != kind:
            raise TypeError("wrong extension kind for domain")
        return value
    return QuadRational(value, 0, kind)


class ExactMatrix:
    """Immutable dense matrix with exact entries in a CoeffDomain."""

    __slots__ = ("domain", "rows", "cols", "data")

    def __init__(self, domain, data):
        data = [list(row) for row in data]
        if not data or not data[0]:
            raise ValueError("dimensions must be positive")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        self.domain = domain
        self.rows = len(data)
        self.cols = cols
        self.data = tuple(
            tuple(_normalize(x, domain) for x in row) for row in data
        )

    @classmethod
    def identity(cls, n, domain=QQ):
        return cls(domain, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols, domain=QQ):
        return cls(domain, [[0] * cols for _ in range(rows)])

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def tolists(self):
        return [list(r) for r in self.data]

    def transpose(self):
        return ExactMatrix(
            self.domain,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def conjugate_transpose(self):
        if self.domain.kind in ("QI", "QW"):
            return ExactMatrix(
                self.domain,
                [
                    [self.data[i][j].conjugate() for i in range(self.rows)]
                    for j in range(self.cols)
                ],
            )
        return self.transpose()

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def add(self, other):
        self._compat(other)
        return ExactMatrix(
            self.domain,
            [
                [self._plus(self.data[i][j], other.data[i][j]) for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def sub(self, other):
        self._compat(other)
        if self.domain.kind == "GF":
            p = self.domain.p
            return ExactMatrix(
                self.domain,
                [
                    [(self.data[i][j] - other.data[i][j]) % p for j in range(self.cols)]
                    for i in range(self.rows)
                ],
            )
        return ExactMatrix(
            self.domain,
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def scale(self, c):
        c = _normalize(c, self.domain)
        if self.domain.kind == "GF":
            p = self.domain.p
            return ExactMatrix(
                self.domain,
                [[x * c % p for x in row] for row in self.data],
            )
        return ExactMatrix(self.domain, [[x * c for x in row] for row in self.data])

    def matmul(self, other):
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        p = self.domain.p if self.domain.kind == "GF" else None
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = sum(self.data[i][t] * other.data[t][j] for t in range(self.cols))
                row.append(s % p if p else s)
            out.append(row)
        return ExactMatrix(self.domain, out)

    def matvec(self, vec):
        vec = [_normalize(v, self.domain) for v in vec]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        p = self.domain.p if self.domain.kind == "GF" else None
        out = []
        for i in range(self.rows):
            s = sum(self.data[i][j] * vec[j] for j in range(self.cols))
            out.append(s % p if p else s)
        return out

    def _plus(self, x, y):
        if self.domain.kind == "GF":
            return (x + y) % self.domain.p
        return x + y

    def _compat(self, other):
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.domain == other.domain
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.domain, self.data))

    def __repr__(self):
        return f"ExactMatrix({self.domain}, {self.rows}x{self.cols})"

    # -- rank / nullspace ---------------------------------------------------

    def rank_nullity(self):
        """(rank, nullity) by exact elimination; pivots are always the first
        nonzero entry in column order, so runs are deterministic."""
        if self.domain.kind == "GF":
            rank = _rank_mod_p([list(r) for r in self.data], self.domain.p)
        elif self.domain.kind == "Q":
            rank = _rank_bareiss(_integer_rows(self.data))
        else:
            rank = _rank_field([list(r) for r in self.data])
        return rank, self.cols - rank

    def nullspace_basis(self):
        """Basis of the right nullspace in reduced-echelon parametrization:
        each free coordinate is set to 1 in turn, pivots back-substituted."""
        if self.domain.kind == "GF":
            p = self.domain.p
            red, pivots = _rref_mod_p([list(r) for r in self.data], p)
            build = lambda x: x % p
            minus = lambda x: (-x) % p
        else:
            red, pivots = _rref_field([list(r) for r in self.data])
            build = lambda x: x
            minus = lambda x: -x
        zero = _normalize(0, self.domain)
        one = _normalize(1, self.domain)
        pivot_cols = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_cols:
                continue
            vec = [zero] * self.cols
            vec[free] = one
            for r, pc in enumerate(pivots):
                vec[pc] = minus(red[r][free]) if red[r][free] else zero
            basis.append([build(x) for x in vec])
        return basis


def _integer_rows(data):
    """Clear denominators row by row (row scaling preserves rank and right
    nullspace)."""
    out = []
    for row in data:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def _rank_bareiss(rows):
    """Fraction-free Gaussian elimination over the integers."""
    if not rows:
        return 0
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        row_p = m[rank]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row_r = m[r]
            for c in range(col, n_cols):
                row_r[c] = (row_r[c] * piv - factor * row_p[c]) // prev
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def _rank_mod_p(rows, p):
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if rows[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(n_rows):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _rref_mod_p(rows, p):
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if rows[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(n_rows):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _rank_field(rows):
    red, pivots = _rref_field(rows)
    return len(pivots)


def _rref_field(rows):
    """Reduced row echelon form over an exact field (Fractions or
    QuadRationals); first-nonzero pivoting."""
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        rows[rank] = [x / piv for x in rows[rank]]
        for r in range(n_rows):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


# ---------------------------------------------------------------------------
# adjacency matrices


def adjacency_matrix(g, shift=0, domain=QQ):
    """A(G) - shift*I over the requested domain."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    if shift:
        for i in range(n):
            rows[i][i] -= shift
    return ExactMatrix(domain, rows)


# ---------------------------------------------------------------------------
# floating-point spectra via Jacobi rotations


@dataclass(frozen=True)
class Spectrum:
    """Multiset of real eigenvalues, sorted descending, plus the tolerance
    the solver converged to."""

    eigenvalues: tuple
    tol: float

    def __iter__(self):
        return iter(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)


def _as_complex_array(m):
    if isinstance(m, ExactMatrix):
        if m.domain.kind in ("QI", "QW"):
            return np.array(
                [[x.to_complex() for x in row] for row in m.data], dtype=complex
            )
        if m.domain.kind == "GF":
            raise ValueError("spectra over finite fields are not defined here")
        return np.array([[float(x) for x in row] for row in m.data], dtype=complex)
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("need a square matrix")
    return arr


def spectrum(m, tol=1e-10):
    """All eigenvalues of a real symmetric / complex Hermitian matrix by
    cyclic two-sided Jacobi rotations, run until the off-diagonal Frobenius
    norm drops below tol."""
    a = _as_complex_array(m).copy()
    n = a.shape[0]
    if not np.allclose(a, a.conj().T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix is not Hermitian")
    if n == 1:
        return Spectrum((float(a[0, 0].real),), tol)
    scale = math.sqrt(float((np.abs(a) ** 2).sum())) or 1.0
    # rotating on denormal-size entries divides by ~0 and wrecks the matrix
    skip = 1e-14 * scale / n
    for _ in range(200):
        sq = np.abs(a) ** 2
        np.fill_diagonal(sq, 0.0)
        off = math.sqrt(float(sq.sum()))
        if off < max(tol, skip * n):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                u = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # similarity by the unitary with columns (c, s*conj(u)) and
                # (s*u, c) in the (p, q) plane; zeroes a[p, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(u) * col_q
                a[:, q] = s * u * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * u * row_q
                a[q, :] = s * np.conj(u) * row_p + c * row_q
    else:
        raise ArithmeticError("Jacobi sweep limit exceeded")
    vals = sorted((float(x) for x in np.diag(a).real), reverse=True)
    return Spectrum(tuple(vals), tol)


def multisets_close(xs, ys, tol=1e-6):
    """Sorted pairwise comparison of two real multisets."""
    xs = sorted(xs)
    ys = sorted(ys)
    return len(xs) == len(ys) and all(abs(x - y) < tol for x, y in zip(xs, ys))


def multiset_contained(xs, ys, tol=1e-6):
    """True if multiset xs embeds into ys matching within tol."""
    ys = sorted(ys)
    used = [False] * len(ys)
    for x in sorted(xs):
        hit = None
        for i, y in enumerate(ys):
            if not used[i] and abs(x - y) < tol:
                hit = i
                break
        if hit is None:
            return False
        used[hit] = True
    return True


# ---------------------------------------------------------------------------
# debug text form


def format_matrix(m):
    """Text form: header "rows cols domain", then row-major entries."""
    def fmt(x):
        if isinstance(x, QuadRational):
            g = "i" if x.kind == "i" else "w"
            sign = "+" if x.b >= 0 else "-"
            return f"{x.a}{sign}{abs(x.b)}{g}"
        return str(x)

    lines = [f"{m.rows} {m.cols} {m.domain}"]
    lines += [" ".join(fmt(x) for x in row) for row in m.data]
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    rows, cols, dom = int(head[0]), int(head[1]), head[2]
    if dom == "Q":
        domain = QQ
    elif dom == "QI":
        domain = QI
    elif dom == "QW":
        domain = QW
    elif dom.startswith("GF(") and dom.endswith(")"):
        domain = prime_field(int(dom[3:-1]))
    else:
        raise ValueError(f"unknown domain {dom!r}")

    def parse_entry(tok):
        if domain.kind in ("QI", "QW"):
            g = "i" if domain.kind == "QI" else "w"
            if tok.endswith(g):
                body = tok[:-1]
                cut = max(body.rfind("+", 1), body.rfind("-", 1))
                return QuadRational(
                    Fraction(body[:cut]), Fraction(body[cut:]), g
                )
            return QuadRational(Fraction(tok), 0, g)
        if domain.kind == "GF":
            return int(tok)
        return Fraction(tok)

    data = [[parse_entry(tok) for tok in ln.split()] for ln in lines[1 : rows + 1]]
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ValueError("entry count mismatch")
    return ExactMatrix(domain, data)
