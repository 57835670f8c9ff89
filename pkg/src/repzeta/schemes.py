"""Local representation zeta functions of the group schemes F_{n,delta}, G_n, H_n.

Here ``t`` stands for ``q^{-s}``.  Two independent routes are provided:
the additive sum over subsets ``I`` of ``{0..n-1}`` and the closed product
form.  Pole data is read off factor lists ``(a, b)`` meaning ``1 - q^a t^b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .qalg import (
    DomainError,
    Poly,
    RatFun,
    SubsetIndex,
    gp_subset_sum,
    int_series,
    pochhammer,
    q_multinomial,
    rat_equal,
    substitute,
)

FAMILIES = ("F", "G", "H")


@dataclass(frozen=True)
class GroupScheme:
    kind: str
    n: int
    delta: int = 0

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise DomainError(f"kind must be one of {FAMILIES}, got {self.kind!r}")
        if self.n < 1:
            raise DomainError("n must be positive")
        if self.kind == "F":
            if self.delta not in (0, 1):
                raise DomainError("delta must be 0 or 1")
        elif self.delta != 0:
            raise DomainError("delta only applies to kind F")

    @property
    def name(self) -> str:
        if self.kind == "F":
            return f"F_{{{self.n},{self.delta}}}"
        return f"{self.kind}_{self.n}"

    def __str__(self):
        return self.name

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def epsilon(self) -> int:
        return self.n % 2

    @property
    def d_rank(self) -> int:
        return functional_equation_degree(self)

    @property
    def alpha(self) -> int:
        return abscissa(self)

    @property
    def abelianization_rank(self) -> int:
        """Number of generators of the abelianization (rank of the free part)."""
        n, d = self.n, self.delta
        return {"F": 2 * n + d, "G": 2 * n, "H": 2 * n}[self.kind]

    @property
    def derived_rank(self) -> int:
        n, d = self.n, self.delta
        return {"F": comb(2 * n + d, 2), "G": n * n, "H": comb(n + 1, 2)}[self.kind]

    @property
    def hirsch_length(self) -> int:
        return self.abelianization_rank + self.derived_rank

    @property
    def commutator_size(self) -> int:
        """Size of the commutator matrix ``R(Y)``."""
        return self.abelianization_rank


def F(n: int, delta: int = 0) -> GroupScheme:
    return GroupScheme("F", n, delta)


def G(n: int) -> GroupScheme:
    return GroupScheme("G", n)


def H(n: int) -> GroupScheme:
    return GroupScheme("H", n)


def all_schemes(max_n: int):
    for n in range(1, max_n + 1):
        yield F(n, 0)
        yield F(n, 1)
        yield G(n)
        yield H(n)


def _X(k: int) -> RatFun:
    return RatFun.monomial({"X": k})


def a_exponent(g: GroupScheme, i: int) -> int:
    """Exponent ``a(G, i)`` of ``q`` in the geometric factor for ``i``."""
    n, d = g.n, g.delta
    if not 0 <= i <= n - 1:
        raise DomainError(f"i must lie in [0, {n - 1}]")
    if g.kind == "F":
        return comb(2 * n + d, 2) - comb(2 * i + d, 2)
    if g.kind == "G":
        return n * n - i * i
    return comb(n + 1, 2) - comb(i + 1, 2)


a_exp = a_exponent


def f_poly(g: GroupScheme, I: SubsetIndex) -> RatFun:
    """Coefficient ``f_{G,I}(X)`` of the additive formula."""
    if I.n != g.n:
        raise DomainError("subset index does not match the scheme's n")
    n, d = g.n, g.delta
    i1 = I.first
    X = RatFun.var("X")
    if g.kind == "F":
        return q_multinomial(I, _X(2)) * pochhammer(_X(2 * (i1 + d) + 1), _X(2), n - i1)
    tail = pochhammer(_X(i1 + 1), X, n - i1)
    if g.kind == "G":
        return q_multinomial(I, X) * tail
    out = tail
    for mu in I.mus[1:]:
        out = out / pochhammer(_X(2), _X(2), mu // 2)
    return out


def local_zeta_additive(g: GroupScheme) -> RatFun:
    """Sum over ``I`` of ``f_{G,I}(q^-1) prod_{i in I} gp(q^{a(G,i)} t^{n-i})``."""
    qinv = RatFun.monomial({"q": -1})
    return gp_subset_sum(
        g.n,
        lambda I: substitute(f_poly(g, I), {"X": qinv}),
        lambda i: RatFun.monomial({"q": a_exponent(g, i), "t": g.n - i}),
    )


def multiplicative_factors(g: GroupScheme) -> tuple[list, list]:
    """Numerator and denominator factor lists; ``(a, b)`` is ``1 - q^a t^b``."""
    n, d = g.n, g.delta
    if g.kind == "F":
        num = [(2 * i, 1) for i in range(n)]
        den = [(2 * (n + d) - 1 + 2 * i, 1) for i in range(n)]
    elif g.kind == "G":
        num = [(i, 1) for i in range(n)]
        den = [(n + i, 1) for i in range(n)]
    else:
        m, eps = divmod(n, 2)
        num = [(0, 1)] + [(2 + 2 * i, 2) for i in range(m)]
        den = [(n, 1)] + [(2 * (m + eps) + 1 + 2 * i, 2) for i in range(m)]
    return cancel_factors(num, den)


def cancel_factors(num: list, den: list) -> tuple[list, list]:
    """Drop factors that appear identically upstairs and downstairs."""
    num, den = list(num), list(den)
    for f in list(num):
        if f in den:
            num.remove(f)
            den.remove(f)
    return num, den


def binomial_factor(a: int, b: int, var: str = "t") -> Poly:
    """``1 - q^a var^b`` cleared of negative powers of ``q``."""
    if a >= 0:
        return 1 - Poly.monomial({"q": a, var: b})
    return Poly.monomial({"q": -a}) - Poly.monomial({var: b})


def factors_to_ratfun(num: list, den: list, var: str = "t") -> RatFun:
    top, bottom = Poly.const(1), Poly.const(1)
    for a, b in num:
        top = top * binomial_factor(a, b, var)
    for a, b in den:
        bottom = bottom * binomial_factor(a, b, var)
    shift = sum(-a for a, _ in num if a < 0) - sum(-a for a, _ in den if a < 0)
    if shift > 0:
        bottom = bottom * Poly.monomial({"q": shift})
    elif shift < 0:
        top = top * Poly.monomial({"q": -shift})
    return RatFun(top, bottom)


def local_zeta_multiplicative(g: GroupScheme) -> RatFun:
    """Closed product form of the local zeta function."""
    return factors_to_ratfun(*multiplicative_factors(g))


def local_zeta(g: GroupScheme) -> RatFun:
    return local_zeta_multiplicative(g)


def verify_additive_vs_multiplicative(g: GroupScheme) -> bool:
    return rat_equal(local_zeta_additive(g), local_zeta_multiplicative(g))


def functional_equation_degree(g: GroupScheme) -> int:
    n, d = g.n, g.delta
    return {"F": comb(2 * n + d, 2), "G": n * n, "H": comb(n + 1, 2)}[g.kind]


def check_functional_equation(g: GroupScheme, zeta: RatFun | None = None) -> bool:
    """``Z(q^-1, t^-1) = q^d Z(q, t)`` with ``d`` the derived rank."""
    z = local_zeta_multiplicative(g) if zeta is None else zeta
    inv = substitute(z, {"q": RatFun.monomial({"q": -1}), "t": RatFun.monomial({"t": -1})})
    return rat_equal(inv, RatFun.monomial({"q": functional_equation_degree(g)}) * z)


def abscissa(g: GroupScheme) -> int:
    n, d = g.n, g.delta
    return {"F": 2 * (2 * n + d - 1), "G": 2 * n, "H": n + 1}[g.kind]


def pole_set_closed(g: GroupScheme) -> set:
    """Real parts of the poles, written down directly."""
    n, d = g.n, g.delta
    if g.kind == "F":
        return {Fraction(2 * (n + i + d) - 1) for i in range(n)}
    if g.kind == "G":
        return {Fraction(n + i) for i in range(n)}
    m, eps = divmod(n, 2)
    return {Fraction(n)} | {Fraction(2 * (m + i + eps) + 1, 2) for i in range(m)}


def pole_set_from_factors(g: GroupScheme) -> set:
    """Poles ``a/b`` from the denominator factors of the product form."""
    _, den = multiplicative_factors(g)
    return {Fraction(a, b) for a, b in den}


def pole_set(g: GroupScheme) -> set:
    """Real parts of the poles of the local zeta function."""
    closed = pole_set_closed(g)
    if closed != pole_set_from_factors(g):
        raise AssertionError(f"pole data disagree for {g}")
    return closed


def genuine_denominator_factors(z: RatFun, factors: list, var: str = "t") -> list:
    """Factors ``1 - q^a var^b`` dividing the denominator but not the numerator of ``z``."""
    out = []
    for a, b in factors:
        f = binomial_factor(a, b, var)
        if z.den.divide(f) is not None and z.num.divide(f) is None:
            out.append((a, b))
    return out


def h_reduction_rhs(n: int) -> RatFun:
    """``(1-t)/(1-q^n t)`` times ``F_{m,eps}`` at ``t -> q^2 t^2``."""
    m, eps = divmod(n, 2)
    t = RatFun.var("t")
    pre = (1 - t) / (1 - RatFun.monomial({"q": n}) * t)
    if m == 0:
        return pre
    f = local_zeta_multiplicative(F(m, eps))
    return pre * substitute(f, {"t": RatFun.monomial({"q": 2, "t": 2})})


def check_H_reduction(n: int) -> bool:
    return rat_equal(local_zeta_multiplicative(H(n)), h_reduction_rhs(n))


def local_coefficients(g: GroupScheme, q_value: int, order: int) -> list[int]:
    """Numbers of twist-isoclasses of dimension ``q^k`` for ``k <= order``."""
    if q_value < 2:
        raise DomainError("q must be at least 2")
    z = substitute(local_zeta_multiplicative(g), {"q": q_value})
    coeffs = int_series(z, "t", order)
    if coeffs[0] != 1 or min(coeffs) < 0:
        raise AssertionError(f"unexpected local coefficients {coeffs} for {g} at q={q_value}")
    return coeffs


def coincidences() -> dict:
    """Small-n isomorphisms visible at the level of zeta functions."""
    heis = local_zeta_multiplicative(G(1))
    return {
        "G_1 = H_1": rat_equal(heis, local_zeta_multiplicative(H(1))),
        "G_1 = F_{1,0}": rat_equal(heis, local_zeta_multiplicative(F(1, 0))),
    }
