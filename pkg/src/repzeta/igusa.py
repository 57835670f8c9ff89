"""Igusa local zeta functions of det on Mat_n and Sym_n and of the Pfaffian on Alt_2n.

In this module ``u`` stands for ``q^{-s}``.  Closed forms are built from
factor lists ``(a, b)`` meaning ``1 - q^a u^b``; the oracle measures the
level sets of the valuation of the relative invariant by enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import kernels
from .counting import MatrixSpaceKind, ResourceError, rank_count_closed, space_template
from .qalg import DomainError, RatFun, rat_equal, rational_series, substitute
from .schemes import (
    GroupScheme,
    a_exponent,
    abscissa,
    binomial_factor,
    cancel_factors,
    factors_to_ratfun,
    genuine_denominator_factors,
    pole_set,
)

DEFAULT_MAX_VECTORS = 10 ** 7
KINDS = ("AltPfaffian", "MatDet", "SymDet")


@dataclass(frozen=True)
class PvsKind:
    """A prehomogeneous vector space; ``size`` is the matrix size."""

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"kind must be one of {KINDS}")
        if self.size < 1 or (self.kind == "AltPfaffian" and self.size % 2):
            raise DomainError(f"bad size {self.size} for {self.kind}")

    @property
    def dim(self) -> int:
        s = self.size
        return {"AltPfaffian": comb(s, 2), "MatDet": s * s, "SymDet": comb(s + 1, 2)}[self.kind]

    @property
    def space(self) -> MatrixSpaceKind:
        return MatrixSpaceKind({"AltPfaffian": "Alt", "MatDet": "Mat", "SymDet": "Sym"}[self.kind],
                               self.size)

    def __str__(self):
        return f"{self.kind}({self.size})"


def AltPfaffian(size: int) -> PvsKind:
    return PvsKind("AltPfaffian", size)


def MatDet(n: int) -> PvsKind:
    return PvsKind("MatDet", n)


def SymDet(n: int) -> PvsKind:
    return PvsKind("SymDet", n)


def closed_factors(kind: PvsKind) -> tuple[list, list]:
    s = kind.size
    if kind.kind == "AltPfaffian":
        num = [(-1 - 2 * i, 0) for i in range(s // 2)]
        den = [(-1 - 2 * i, 1) for i in range(s // 2)]
    elif kind.kind == "MatDet":
        num = [(-1 - i, 0) for i in range(s)]
        den = [(-1 - i, 1) for i in range(s)]
    else:
        m, eps = divmod(s, 2)
        num = [(-1 - s, 1) if eps == 0 else (-s, 0)] + [(-1 - 2 * i, 0) for i in range(m)]
        den = [(-1, 1)] + [(-3 - 2 * i, 2) for i in range(m)]
    return cancel_factors(num, den)


def igusa_closed(kind: PvsKind) -> RatFun:
    """Closed form of the Igusa zeta function as a RatFun in ``q`` and ``u``."""
    return factors_to_ratfun(*closed_factors(kind), var="u")


def pvs_pole_set(kind: PvsKind) -> set:
    num, den = closed_factors(kind)
    z = igusa_closed(kind)
    poles = [f for f in den if f[1] > 0]
    if genuine_denominator_factors(z, poles, "u") != poles:
        raise AssertionError(f"cancelled denominator factor in {kind}")
    return {Fraction(a, b) for a, b in poles}


def closed_coefficients(kind: PvsKind, q: int, order: int) -> list[Fraction]:
    """u-series coefficients of the closed form at a numeric ``q``."""
    return [Fraction(c) for c in rational_series(substitute(igusa_closed(kind), {"q": q}), "u", order)]


def igusa_level_counts(kind: PvsKind, p: int, k: int, *, max_vectors: int = DEFAULT_MAX_VECTORS,
                       jobs: int = 1, backend: str | None = None) -> int:
    """Number of ``x mod p^{k+1}`` with ``v_p(f(x)) = k``."""
    D = kind.dim
    if p ** ((k + 1) * D) > max_vectors:
        raise ResourceError(f"{p}^{(k + 1) * D} vectors exceed the enumeration bound for {kind}")
    cap = k + 1
    hist = kernels.tally_types(space_template(kind.space), D, p, cap,
                               primitive=False, jobs=jobs, backend=backend)
    total = 0
    for caps, cnt in hist.items():
        vals = caps[0::2] if kind.kind == "AltPfaffian" else caps
        if kind.kind == "AltPfaffian" and any(caps[2 * j] != caps[2 * j + 1]
                                              for j in range(len(caps) // 2)):
            raise AssertionError(f"unpaired antisymmetric type {caps}")
        if sum(vals) == k:
            total += cnt
    return total


def igusa_coeff_oracle(kind: PvsKind, p: int, k: int, **kw) -> Fraction:
    """Exact measure of ``{x : v_p(f(x)) = k}`` by enumeration modulo ``p^{k+1}``."""
    return Fraction(igusa_level_counts(kind, p, k, **kw), p ** ((k + 1) * kind.dim))


def _det(mat: list) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(row) for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def _pf(mat: list) -> int:
    n = len(mat)
    if n == 0:
        return 1
    total = 0
    for j in range(1, n):
        if mat[0][j]:
            keep = [k for k in range(n) if k not in (0, j)]
            minor = [[mat[a][b] for b in keep] for a in keep]
            total += (-1) ** (j - 1) * mat[0][j] * _pf(minor)
    return total


def pfaffian(mat: list) -> int:
    """Pfaffian by first-row expansion; checks ``Pf^2 = det``."""
    n = len(mat)
    if n % 2:
        raise DomainError("Pfaffian needs an even-sized matrix")
    for i in range(n):
        for j in range(n):
            if mat[i][j] != -mat[j][i]:
                raise DomainError("matrix is not antisymmetric")
    pf = _pf(mat)
    if n <= 6 and pf * pf != _det(mat):
        raise AssertionError("Pf^2 != det")
    return pf


def sym_alt_relation_rhs(n: int) -> RatFun:
    u = RatFun.var("u")
    pre = (1 - RatFun.monomial({"q": -2 * n - 1}) * u) / (1 - RatFun.monomial({"q": -1}) * u)
    alt = substitute(igusa_closed(AltPfaffian(2 * n)), {"u": RatFun.monomial({"q": -2, "u": 2})})
    return pre * alt


def verify_sym_alt_relation(n: int) -> bool:
    return rat_equal(igusa_closed(SymDet(2 * n)), sym_alt_relation_rhs(n))


def matched_kind(g: GroupScheme) -> PvsKind:
    return {"F": AltPfaffian(2 * g.n), "G": MatDet(g.n), "H": SymDet(g.n)}[g.kind]


def verify_pole_translation(g: GroupScheme) -> bool:
    alpha = abscissa(g)
    return {x - alpha for x in pole_set(g)} == pvs_pole_set(matched_kind(g))


def bs_candidates(n: int) -> set:
    from .schemes import H
    g = H(n)
    return {Fraction(a_exponent(g, i), n - i) - abscissa(g) for i in range(n)}


def verify_bs_candidates(n: int) -> bool:
    return bs_candidates(n) == {Fraction(-(i + 2), 2) for i in range(n)}


def full_rank_measure(kind: PvsKind, q: int) -> Fraction:
    """Closed measure of the locus where ``f`` is a unit."""
    return Fraction(rank_count_closed(kind.space, 0, q), q ** kind.dim)


def constant_term(kind: PvsKind, q: int) -> Fraction:
    return closed_coefficients(kind, q, 0)[0]


__all__ = [
    "PvsKind", "AltPfaffian", "MatDet", "SymDet", "igusa_closed", "pvs_pole_set",
    "closed_coefficients", "igusa_coeff_oracle", "igusa_level_counts", "pfaffian",
    "verify_sym_alt_relation", "verify_pole_translation", "verify_bs_candidates",
    "bs_candidates", "full_rank_measure", "binomial_factor",
]
