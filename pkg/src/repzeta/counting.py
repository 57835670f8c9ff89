"""Rank counts over finite fields and elementary-divisor type counts over Z/p^N.

The enumeration side goes through :mod:`repzeta.kernels`; the integer
Smith form below is an independent reference used to validate it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from . import kernels
from .qalg import DomainError, RatFun, SubsetIndex
from .schemes import GroupScheme, a_exponent, f_poly

DEFAULT_MAX_VECTORS = 10 ** 7


class ResourceError(RuntimeError):
    pass


# -- matrix spaces -------------------------------------------------------

@dataclass(frozen=True)
class MatrixSpaceKind:
    kind: str  # "Alt", "Mat" or "Sym"
    size: int

    def __post_init__(self):
        if self.kind not in ("Alt", "Mat", "Sym"):
            raise DomainError(f"unknown matrix space {self.kind!r}")
        if self.size < 1:
            raise DomainError("size must be positive")

    @property
    def n(self) -> int:
        return self.size // 2 if self.kind == "Alt" else self.size

    @property
    def delta(self) -> int:
        return self.size % 2 if self.kind == "Alt" else 0

    @property
    def dim(self) -> int:
        s = self.size
        return {"Alt": comb(s, 2), "Mat": s * s, "Sym": comb(s + 1, 2)}[self.kind]

    def rank_of_index(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise DomainError(f"corank index must lie in [0, {self.n}]")
        return 2 * (self.n - i) if self.kind == "Alt" else self.n - i

    def template(self):
        return space_template(self)

    def __str__(self):
        return f"{self.kind}({self.size})"


def Alt(size: int) -> MatrixSpaceKind:
    return MatrixSpaceKind("Alt", size)


def Mat(n: int) -> MatrixSpaceKind:
    return MatrixSpaceKind("Mat", n)


def Sym(n: int) -> MatrixSpaceKind:
    return MatrixSpaceKind("Sym", n)


def _poch(x: Fraction, step: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= 1 - x * step ** i
    return out


def _gauss(a: int, b: int, x: Fraction) -> Fraction:
    return _poch(x, x, a) / (_poch(x, x, b) * _poch(x, x, a - b))


def rank_count_closed(space: MatrixSpaceKind, i: int, q: int) -> int:
    """Number of matrices of rank ``rank_of_index(i)`` in ``space`` over F_q."""
    space.rank_of_index(i)
    n, d = space.n, space.delta
    Q = Fraction(q)
    if space.kind == "Alt":
        val = (_gauss(n, i, 1 / Q ** 2) * _poch(Q ** (-2 * (i + d) - 1), 1 / Q ** 2, n - i)
               * Q ** (comb(2 * n + d, 2) - comb(2 * i + d, 2)))
    elif space.kind == "Mat":
        val = _gauss(n, i, 1 / Q) * _poch(Q ** (-i - 1), 1 / Q, n - i) * Q ** (n * n - i * i)
    else:
        val = (_poch(Q ** -2, Q ** -2, (n - i) // 2) ** -1 * _poch(Q ** (-i - 1), 1 / Q, n - i)
               * Q ** (comb(n + 1, 2) - comb(i + 1, 2)))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral rank count {val} for {space}, i={i}, q={q}")
    return val.numerator


def space_template(space: MatrixSpaceKind):
    """``(r, idx, sgn)``: the generic matrix of ``space`` in its coordinates."""
    s = space.size
    idx = [-1] * (s * s)
    sgn = [0] * (s * s)
    c = 0
    if space.kind == "Mat":
        for i in range(s):
            for j in range(s):
                idx[i * s + j], sgn[i * s + j] = c, 1
                c += 1
    elif space.kind == "Sym":
        for i in range(s):
            for j in range(i, s):
                idx[i * s + j], sgn[i * s + j] = c, 1
                idx[j * s + i], sgn[j * s + i] = c, 1
                c += 1
    else:
        for i in range(s):
            for j in range(i + 1, s):
                idx[i * s + j], sgn[i * s + j] = c, 1
                idx[j * s + i], sgn[j * s + i] = c, -1
                c += 1
    return s, idx, sgn


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise DomainError(f"{q} is not a prime power")
            return p, k
    raise DomainError(f"{q} is not a prime power")


class GF:
    """Arithmetic tables for the finite field with ``p^k`` elements."""

    def __init__(self, q: int):
        p, k = _prime_power(q)
        self.q, self.p, self.k = q, p, k
        mod = self._irreducible(p, k)
        self.add = [[self._vadd(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[self._vmul(a, b, mod) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.inv = [0] + [next(b for b in range(q) if self.mul[a][b] == 1) for a in range(1, q)]

    def _digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _undigits(self, ds):
        return sum(d * self.p ** i for i, d in enumerate(ds))

    def _vadd(self, a, b):
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _vmul(self, a, b, mod):
        p, k = self.p, self.k
        prod = [0] * (2 * k)
        for i, x in enumerate(self._digits(a)):
            for j, y in enumerate(self._digits(b)):
                prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 1, k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(k + 1):
                    prod[deg - k + i] = (prod[deg - k + i] - c * mod[i]) % p
        return self._undigits(prod[:k])

    @staticmethod
    def _irreducible(p, k):
        """Monic irreducible of degree ``k`` over F_p as coefficient list (low to high)."""
        if k == 1:
            return [0, 1]
        for tail in product(range(p), repeat=k):
            poly = list(tail) + [1]
            if poly[0] == 0:
                continue
            # degree <= 3 suffices here: irreducible iff no root
            if k <= 3 and all(sum(c * x ** i for i, c in enumerate(poly)) % p for x in range(p)):
                return poly
        raise DomainError("only field extensions of degree <= 3 are supported")

    def from_int(self, z: int) -> int:
        """Image of the integer ``z`` in the prime field."""
        return z % self.p

    def rank(self, rows: list) -> int:
        m = [list(r) for r in rows]
        rank, cols = 0, len(m[0]) if m else 0
        for c in range(cols):
            piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = self.inv[m[rank][c]]
            m[rank] = [self.mul[inv][x] for x in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][c]:
                    f = self.neg[m[i][c]]
                    m[i] = [self.add[x][self.mul[f][y]] for x, y in zip(m[i], m[rank])]
            rank += 1
        return rank


def rank_count_enumerate(space: MatrixSpaceKind, q: int, *, max_vectors: int = DEFAULT_MAX_VECTORS,
                         backend: str | None = None) -> dict:
    """Exhaustive rank distribution over F_q."""
    if q ** space.dim > max_vectors:
        raise ResourceError(f"{q}^{space.dim} matrices exceed the enumeration bound")
    r, idx, sgn = space_template(space)
    if _is_prime(q):
        hist = kernels.tally_types((r, idx, sgn), space.dim, q, 1, primitive=False, backend=backend)
        out: dict = {}
        for caps, cnt in hist.items():
            rk = sum(1 for c in caps if c == 0)
            out[rk] = out.get(rk, 0) + cnt
        return dict(sorted(out.items()))
    F = GF(q)
    out = {}
    for x in product(range(q), repeat=space.dim):
        rows = [[0 if idx[i * r + j] < 0 else
                 (x[idx[i * r + j]] if sgn[i * r + j] > 0 else F.neg[x[idx[i * r + j]]])
                 for j in range(r)] for i in range(r)]
        rk = F.rank(rows)
        out[rk] = out.get(rk, 0) + 1
    return dict(sorted(out.items()))


# -- commutator matrices and types ---------------------------------------

def commutator_template(g: GroupScheme):
    """``(r, idx, sgn)`` for the commutator matrix ``R(Y)`` of ``g``."""
    n = g.n
    if g.kind == "F":
        return space_template(Alt(2 * n + g.delta))
    r = 2 * n
    idx = [-1] * (r * r)
    sgn = [0] * (r * r)
    c = 0
    if g.kind == "G":
        for i in range(n):
            for j in range(n):
                idx[i * r + n + j], sgn[i * r + n + j] = c, 1
                idx[(n + j) * r + i], sgn[(n + j) * r + i] = c, -1
                c += 1
    else:
        for i in range(n):
            for j in range(i, n):
                for a, b in ((i, j), (j, i)):
                    idx[a * r + n + b], sgn[a * r + n + b] = c, 1
                    idx[(n + a) * r + b], sgn[(n + a) * r + b] = c, -1
                c += 1
    return r, idx, sgn


def commutator_matrix(g: GroupScheme, w, modulus: int | None = None) -> list:
    """Specialize ``R(Y)`` at the coordinate vector ``w``."""
    if len(w) != g.d_rank:
        raise DomainError(f"{g} needs {g.d_rank} coordinates, got {len(w)}")
    r, idx, sgn = commutator_template(g)
    out = [[0 if idx[i * r + j] < 0 else sgn[i * r + j] * w[idx[i * r + j]] for j in range(r)]
           for i in range(r)]
    if modulus:
        out = [[x % modulus for x in row] for row in out]
    return out


@dataclass(frozen=True)
class ElemDivType:
    caps: tuple
    N: int

    @property
    def nu(self) -> tuple:
        """Paired profile: one entry per pair of elementary divisors."""
        c = self.caps
        half = len(c) // 2
        for j in range(half):
            if c[2 * j] != c[2 * j + 1]:
                raise ValueError(f"elementary divisors {c} do not pair up")
        return tuple(c[2 * j] for j in range(half))


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def smith_diagonal(mat: list) -> list:
    """Nonzero invariant factors of an integer matrix by exact row/column reduction."""
    A = [list(map(int, row)) for row in mat]
    m = len(A)
    ncols = len(A[0]) if m else 0
    diag = []
    for t in range(min(m, ncols)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, ncols) if A[i][j]]
            if not nz:
                return diag
            _, pi, pj = min(nz)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            a = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    f = A[i][t] // a
                    A[i] = [x - f * y for x, y in zip(A[i], A[t])]
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, ncols):
                if A[t][j]:
                    f = A[t][j] // a
                    for row in A:
                        row[j] -= f * row[t]
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, ncols) if A[i][j] % a), None)
            if bad is not None:
                A[t] = [x + y for x, y in zip(A[t], A[bad])]
                continue
            diag.append(abs(a))
            break
    return diag


def elem_div_type(mat: list, p: int, N: int) -> ElemDivType:
    """Capped type of ``mat`` over Z/p^N via the Smith form of ``[mat; p^N * I]``."""
    r = len(mat)
    stacked = [list(row) for row in mat] + [[p ** N if i == j else 0 for j in range(r)]
                                             for i in range(r)]
    diag = smith_diagonal(stacked)
    caps = sorted(min(_valuation(x, p), N) for x in diag)
    caps += [N] * (r - len(caps))
    return ElemDivType(tuple(sorted(caps)), N)


def target_profile(I: SubsetIndex, r_I) -> tuple:
    """The type ``nu`` singled out by ``(I, r_I)``, ascending."""
    r_I = tuple(r_I)
    if len(r_I) != len(I):
        raise DomainError("r_I must have one entry per element of I")
    if any(r < 1 for r in r_I):
        raise DomainError("entries of r_I must be positive")
    mus = I.mus
    l = I.l
    out = []
    partial = 0
    for j in range(l, -1, -1):
        out += [partial] * mus[j]
        if j >= 1:
            partial += r_I[j - 1]
    return tuple(out)


def count_type_closed(g: GroupScheme, I: SubsetIndex, r_I, p: int) -> int:
    """Closed count of primitive vectors of the given type."""
    r_I = tuple(r_I)
    f = f_poly(g, I)
    if isinstance(f, RatFun):
        x = Fraction(1, p)
        val = Fraction(f.num.evaluate({"X": x})) / f.den.evaluate({"X": x})
    else:
        val = Fraction(f.evaluate({"X": Fraction(1, p)}))
    val *= Fraction(p) ** sum(r * a_exponent(g, i) for r, i in zip(r_I, I.elements))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral type count {val}")
    return val.numerator


@lru_cache(maxsize=64)
def _type_histogram(g: GroupScheme, p: int, N: int, jobs: int, backend: str | None) -> dict:
    hist = kernels.tally_types(commutator_template(g), g.d_rank, p, N,
                               primitive=N > 0, jobs=jobs, backend=backend)
    out: dict = {}
    for caps, cnt in hist.items():
        nu = ElemDivType(caps, N).nu
        out[nu] = out.get(nu, 0) + cnt
    return out


def type_histogram(g: GroupScheme, p: int, N: int, *, max_vectors: int = DEFAULT_MAX_VECTORS,
                   jobs: int = 1, backend: str | None = None) -> dict:
    """Counts of primitive ``w`` mod ``p^N`` by type ``nu``."""
    if kernels.work(g.d_rank, p, N, primitive=N > 0) > max_vectors:
        raise ResourceError(f"{p}^{N * g.d_rank} vectors exceed the enumeration bound for {g}")
    return dict(_type_histogram(g, p, N, jobs, backend))


def count_type_enumerate(g: GroupScheme, I: SubsetIndex, r_I, p: int, **kw) -> int:
    """Brute-force count of primitive vectors of the type singled out by ``(I, r_I)``."""
    r_I = tuple(r_I)
    N = sum(r_I)
    profile = target_profile(I, r_I)
    if N == 0:
        return 1  # W_0 = {0}
    return type_histogram(g, p, N, **kw).get(profile, 0)


def compositions(I: SubsetIndex, total: int):
    """Positive vectors indexed by ``I`` summing to ``total``."""
    l = len(I)
    if l == 0:
        if total == 0:
            yield ()
        return

    def rec(k, left):
        if k == 1:
            if left >= 1:
                yield (left,)
            return
        for first in range(1, left - k + 2):
            for rest in rec(k - 1, left - first):
                yield (first,) + rest

    yield from rec(l, total)


def truncation_terms(g: GroupScheme, order: int):
    """All ``(I, r_I)`` with ``sum r_i (n - i) <= order``."""
    n = g.n
    for I in SubsetIndex.all(n):
        if not len(I):
            yield I, ()
            continue
        weights = [n - i for i in I.elements]

        def rec(k, budget):
            if k == len(weights):
                yield ()
                return
            for r in range(1, budget // weights[k] + 1):
                for rest in rec(k + 1, budget - r * weights[k]):
                    yield (r,) + rest

        for r_I in rec(0, order):
            yield I, r_I


def local_zeta_truncation_oracle(g: GroupScheme, p: int, t_order: int, **kw) -> list[int]:
    """Coefficients of ``t^0..t^order`` assembled from brute-force type counts."""
    coeffs = [0] * (t_order + 1)
    for I, r_I in truncation_terms(g, t_order):
        k = sum(r * (g.n - i) for r, i in zip(r_I, I.elements))
        coeffs[k] += count_type_enumerate(g, I, r_I, p, **kw)
    return coeffs
