"""Exact multivariate polynomials and rational functions over the integers.

Everything lives in the fixed alphabet ``q, t, X, Y, Z, u``.  Exponent
vectors are dense 6-tuples.  Rational functions are kept in a light
canonical form (integer content 1, common monomial factor cancelled, the
lowest graded-lex term of the denominator positive) and compared by
cross-multiplication; no multivariate gcd is ever taken.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence, Union

VARS = ("q", "t", "X", "Y", "Z", "u")
NVARS = len(VARS)
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


class AlgebraError(ValueError):
    """Base class for errors raised by the algebra layer."""


class DomainError(AlgebraError):
    pass


class DivisionError(AlgebraError):
    pass


class SubstitutionSingular(AlgebraError):
    pass


class NotExpandable(AlgebraError):
    pass


def _order_key(exp):
    # graded lex, u most significant inside a degree
    return (sum(exp), exp[::-1])


def _var_index(var: str) -> int:
    try:
        return _INDEX[var]
    except KeyError:
        raise DomainError(f"unknown variable {var!r}; alphabet is {VARS}") from None


class Poly:
    """Polynomial with integer coefficients, immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != NVARS or min(e) < 0:
                        raise DomainError(f"bad exponent vector {e!r}")
                    clean[tuple(e)] = int(c)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        return cls.monomial({name: power})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        e = [0] * NVARS
        for v, k in exps.items():
            if k < 0:
                raise DomainError("negative exponent in Poly; use RatFun.monomial")
            e[_var_index(v)] += k
        return cls._raw({tuple(e): int(coeff)} if coeff else {})

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def constant_value(self) -> int:
        return self.terms.get(_ZERO_EXP, 0)

    def sorted_terms(self, descending: bool = False):
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=descending)

    def leading(self):
        """Largest term in graded-lex order as ``(exp, coeff)``."""
        e = max(self.terms, key=_order_key)
        return e, self.terms[e]

    def lowest(self):
        e = min(self.terms, key=_order_key)
        return e, self.terms[e]

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = _var_index(var)
        return max(e[i] for e in self.terms)

    def min_exponents(self) -> tuple:
        return tuple(min(e[i] for e in self.terms) for i in range(NVARS))

    def content(self) -> int:
        return reduce(gcd, self.terms.values(), 0)

    def variables(self) -> set[str]:
        return {VARS[i] for e in self.terms for i in range(NVARS) if e[i]}

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2],
                     ea[3] + eb[3], ea[4] + eb[4], ea[5] + eb[5])
                out[e] = get(e, 0) + ca * cb
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power of a Poly")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "Poly":
        return Poly._raw({e: v * c for e, v in self.terms.items()}) if c else Poly()

    def shift(self, exp: Sequence[int]) -> "Poly":
        """Multiply by the monomial with exponent vector ``exp`` (may be negative if it stays valid)."""
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a + b for a, b in zip(e, exp))
            if min(ne) < 0:
                raise DomainError("shift produced a negative exponent")
            out[ne] = c
        return Poly._raw(out)

    def exact_div_int(self, c: int) -> "Poly":
        out = {}
        for e, v in self.terms.items():
            qv, r = divmod(v, c)
            if r:
                raise DivisionError(f"coefficient {v} not divisible by {c}")
            out[e] = qv
        return Poly._raw(out)

    def divide(self, other: "Poly") -> "Poly | None":
        """Exact quotient ``self / other`` or ``None`` if it does not divide."""
        if other.is_zero():
            raise DivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly()
        if len(other.terms) == 1:
            (eo, co), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(a - b for a, b in zip(e, eo))
                if min(ne) < 0 or c % co:
                    return None
                out[ne] = c // co
            return Poly._raw(out)
        lead_e, lead_c = other.leading()
        # quick rejections: per-variable degrees
        for i in range(NVARS):
            if max(e[i] for e in self.terms) < max(e[i] for e in other.terms):
                return None
        rem = dict(self.terms)
        quot = {}
        oterms = list(other.terms.items())
        while rem:
            e = max(rem, key=_order_key)
            c = rem[e]
            de = tuple(a - b for a, b in zip(e, lead_e))
            if min(de) < 0 or c % lead_c:
                return None
            qc = c // lead_c
            quot[de] = qc
            for eo, co in oterms:
                ne = (de[0] + eo[0], de[1] + eo[1], de[2] + eo[2],
                      de[3] + eo[3], de[4] + eo[4], de[5] + eo[5])
                v = rem.get(ne, 0) - qc * co
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return Poly._raw(quot)

    def coefficients_in(self, var: str) -> dict[int, "Poly"]:
        """Split as ``sum_k c_k * var^k`` with ``c_k`` free of ``var``."""
        i = _var_index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Poly._raw(v) for k, v in out.items()}

    def evaluate(self, values: Mapping[str, int]):
        """Integer/Fraction evaluation for variables in ``values``; all variables must be bound."""
        total = 0
        idx = [(_var_index(v), x) for v, x in values.items()]
        for e, c in self.terms.items():
            term = c
            for i, x in idx:
                if e[i]:
                    term = term * x ** e[i]
            for i in range(NVARS):
                if e[i] and VARS[i] not in values:
                    raise DomainError(f"variable {VARS[i]} left unbound")
            total += term
        return total

    # -- comparisons ---------------------------------------------------
    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"Poly({render_poly(self)!r})"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.const(x)
    return NotImplemented


PolyLike = Union[Poly, int]


class RatFun:
    """Quotient ``num / den`` of integer polynomials in light canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFun needs Poly or int arguments")
        if den.is_zero():
            raise DivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def var(cls, name: str, power: int = 1) -> "RatFun":
        return cls.monomial({name: power})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "RatFun":
        pos = {v: k for v, k in exps.items() if k > 0}
        neg = {v: -k for v, k in exps.items() if k < 0}
        return cls(Poly.monomial(pos, coeff), Poly.monomial(neg))

    @classmethod
    def from_laurent(cls, terms: Mapping[tuple, int]) -> "RatFun":
        """Build from a Laurent dict (exponent vectors may be negative)."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(Poly())
        low = tuple(min(0, min(e[i] for e in terms)) for i in range(NVARS))
        num = Poly._raw({tuple(a - b for a, b in zip(e, low)): c for e, c in terms.items()})
        den = Poly._raw({tuple(-b for b in low): 1})
        return cls(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_constant() and self.den.constant_value() == 1

    def as_poly(self) -> Poly:
        """Return the polynomial this RatFun equals, raising if it is not one."""
        q = self.num.divide(self.den)
        if q is None:
            raise DivisionError(f"{self} is not a polynomial")
        return q

    def to_laurent(self) -> dict:
        """Laurent expansion when the denominator is a monomial."""
        if len(self.den.terms) != 1:
            raise DivisionError("denominator is not a monomial")
        (de, dc), = self.den.terms.items()
        out = {}
        for e, c in self.num.terms.items():
            if c % dc:
                raise DivisionError("non-integral Laurent coefficient")
            out[tuple(a - b for a, b in zip(e, de))] = c // dc
        return out

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        d, ka, kb = _den_lcm(self.den, other.den)
        return RatFun(self.num * ka + other.num * kb, d)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.num.is_zero():
                raise DivisionError("negative power of zero")
            return RatFun(self.den ** (-k), self.num ** (-k))
        return RatFun(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return rat_equal(self, other)

    __hash__ = None  # equality is cross-multiplication, not structural

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RatFun({render(self)!r})"


def _as_rat(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun._raw(x, Poly.const(1))
    if isinstance(x, int):
        return RatFun._raw(Poly.const(x), Poly.const(1))
    return NotImplemented


def _normalize(num: Poly, den: Poly):
    if num.is_zero():
        return Poly(), Poly.const(1)
    g = gcd(num.content(), den.content())
    mn, md = num.min_exponents(), den.min_exponents()
    common = tuple(min(a, b) for a, b in zip(mn, md))
    if any(common):
        neg = tuple(-c for c in common)
        num, den = num.shift(neg), den.shift(neg)
    sign = -1 if den.lowest()[1] < 0 else 1
    f = g * sign
    if f != 1:
        num = num.exact_div_int(f)
        den = den.exact_div_int(f)
    return num, den


def _split_monomial(p: Poly):
    m = p.min_exponents()
    return m, p.shift(tuple(-x for x in m))


def _den_lcm(a: Poly, b: Poly):
    """Cheap common multiple ``d`` of two denominators with cofactors ``d/a, d/b``."""
    ma, ra = _split_monomial(a)
    mb, rb = _split_monomial(b)
    m = tuple(max(x, y) for x, y in zip(ma, mb))
    ca, cb = ra.content(), rb.content()
    cl = ca * cb // gcd(ca, cb)
    ra1, rb1 = ra.exact_div_int(ca), rb.exact_div_int(cb)
    if ra1 == rb1:
        core, ka_core, kb_core = ra1, Poly.const(1), Poly.const(1)
    else:
        k = ra1.divide(rb1) if len(rb1.terms) <= len(ra1.terms) else None
        if k is not None:
            core, ka_core, kb_core = ra1, Poly.const(1), k
        else:
            k = rb1.divide(ra1) if len(ra1.terms) <= len(rb1.terms) else None
            if k is not None:
                core, ka_core, kb_core = rb1, k, Poly.const(1)
            else:
                core, ka_core, kb_core = ra1 * rb1, rb1, ra1
    d = core.shift(m).scale(cl)
    ka = ka_core.shift(tuple(x - y for x, y in zip(m, ma))).scale(cl // ca)
    kb = kb_core.shift(tuple(x - y for x, y in zip(m, mb))).scale(cl // cb)
    return d, ka, kb


# -- public operations ---------------------------------------------------

def rat_equal(a: RatFun, b: RatFun) -> bool:
    """True iff ``a`` and ``b`` are the same rational function."""
    a, b = _as_rat(a), _as_rat(b)
    return a.num * b.den == b.num * a.den


def rat(x) -> RatFun:
    """Coerce ints, Polys, variable names and parsable strings to RatFun."""
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (Poly, int)):
        return _as_rat(x)
    if isinstance(x, str):
        if x in _INDEX:
            return RatFun.var(x)
        return parse(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFun")


def rat_sum(terms: Iterable[RatFun]) -> RatFun:
    """Sum many rational functions over a shared denominator.

    Terms with the largest denominators go first so that later
    denominators usually divide the running common multiple.
    """
    terms = [rat(t) for t in terms]
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return RatFun(0)
    terms.sort(key=lambda r: (r.den.degree(), len(r.den.terms)), reverse=True)
    num, den = terms[0].num, terms[0].den
    for t in terms[1:]:
        if t.den == den:
            num = num + t.num
            continue
        d, ka, kb = _den_lcm(den, t.den)
        num = num * ka + t.num * kb
        den = d
    return RatFun(num, den)


def gp(x) -> RatFun:
    """Geometric progression ``x / (1 - x)``."""
    x = rat(x)
    return RatFun(x.num, x.den - x.num)


def substitute(f, bindings: Mapping[str, object]) -> RatFun:
    """Simultaneously replace variables by rational functions."""
    f = rat(f)
    vals = {v: rat(x) for v, x in bindings.items()}
    for v in vals:
        _var_index(v)
    nn, nd = _subst_poly(f.num, vals)
    dn, dd = _subst_poly(f.den, vals)
    if dn.is_zero():
        raise SubstitutionSingular(f"denominator of {f} vanishes under {bindings}")
    return RatFun(nn * dd, nd * dn)


def _subst_poly(p: Poly, vals: Mapping[str, RatFun]):
    """Return (numerator, denominator) Polys of ``p`` evaluated at ``vals``."""
    if p.is_zero():
        return Poly(), Poly.const(1)
    bound = [(_var_index(v), r) for v, r in vals.items()]
    top = {i: max(e[i] for e in p.terms) for i, _ in bound}
    for i, r in bound:
        if r.den.is_zero():
            raise SubstitutionSingular("binding with zero denominator")
    num_pows = {i: [Poly.const(1)] for i, _ in bound}
    den_pows = {i: [Poly.const(1)] for i, _ in bound}
    for i, r in bound:
        for _ in range(top[i]):
            num_pows[i].append(num_pows[i][-1] * r.num)
            den_pows[i].append(den_pows[i][-1] * r.den)
    bound_idx = {i for i, _ in bound}
    total = Poly()
    # group terms by bound exponent pattern to share products
    groups: dict = {}
    for e, c in p.terms.items():
        key = tuple(e[i] for i, _ in bound)
        rest = tuple(0 if i in bound_idx else e[i] for i in range(NVARS))
        groups.setdefault(key, {})[rest] = c
    for key, rest_terms in groups.items():
        term = Poly._raw(rest_terms)
        for (i, _), k in zip(bound, key):
            term = term * num_pows[i][k] * den_pows[i][top[i] - k]
        total = total + term
    den = Poly.const(1)
    for i, _ in bound:
        den = den * den_pows[i][top[i]]
    return total, den


def series_coeffs(f, var: str, order: int) -> list[RatFun]:
    """Power-series coefficients ``c_0..c_order`` of ``f`` in ``var``."""
    f = rat(f)
    if order < 0:
        raise DomainError("order must be nonnegative")
    N = f.num.coefficients_in(var)
    D = f.den.coefficients_in(var)
    d0 = D.get(0)
    if d0 is None or d0.is_zero():
        raise NotExpandable(f"denominator of {f} has zero constant term in {var}")
    d0r = RatFun(d0)
    if all(p.is_constant() for p in N.values()) and all(p.is_constant() for p in D.values()):
        return [RatFun(c) if isinstance(c, int) else RatFun(c.numerator, c.denominator)
                for c in _int_series(N, D, order)]
    coeffs: list[RatFun] = []
    for k in range(order + 1):
        acc = [RatFun(N[k])] if k in N else []
        for j in range(1, k + 1):
            if j in D:
                acc.append(-(RatFun(D[j]) * coeffs[k - j]))
        coeffs.append(rat_sum(acc) / d0r if acc else RatFun(0))
    return coeffs


def _int_series(N, D, order):
    from fractions import Fraction
    n = [N[k].constant_value() if k in N else 0 for k in range(order + 1)]
    d = [D[k].constant_value() if k in D else 0 for k in range(order + 1)]
    d0 = d[0]
    out = []
    for k in range(order + 1):
        s = n[k] - sum(d[j] * out[k - j] for j in range(1, k + 1))
        c = Fraction(s, d0)
        out.append(c.numerator if c.denominator == 1 else c)
    return out


def rational_series(f, var: str, order: int) -> list:
    """Series coefficients (ints or Fractions) of a univariate integer RatFun."""
    f = rat(f)
    N = f.num.coefficients_in(var)
    D = f.den.coefficients_in(var)
    for p in list(N.values()) + list(D.values()):
        if not p.is_constant():
            raise DomainError(f"{f} is not univariate in {var}")
    if 0 not in D:
        raise NotExpandable(f"denominator of {f} has zero constant term in {var}")
    return _int_series(N, D, order)


def int_series(f, var: str, order: int) -> list[int]:
    """Series coefficients of a univariate integer RatFun, asserted integral."""
    out = rational_series(f, var, order)
    for c in out:
        if not isinstance(c, int):
            raise DomainError(f"non-integral series coefficient {c}")
    return out


# -- q-combinatorics -----------------------------------------------------

def _base(var) -> RatFun:
    return rat(var)


def q_factorial(n: int, var="X") -> Poly:
    """``(1-X)(1-X^2)...(1-X^n)`` as a Poly (``var`` must be a polynomial)."""
    x = _base(var).as_poly()
    out = Poly.const(1)
    for k in range(1, n + 1):
        out = out * (1 - x ** k)
    return out


def gaussian_binomial(a: int, b: int, var="X") -> Poly:
    """Gaussian polynomial ``(a choose b)_var``."""
    if b < 0 or a < b:
        raise DomainError(f"gaussian_binomial needs a >= b >= 0, got ({a}, {b})")
    x = _base(var)
    if not x.is_poly():
        raise DomainError("gaussian_binomial takes a polynomial base; substitute afterwards")
    num = q_factorial(a, x)
    den = q_factorial(a - b, x) * q_factorial(b, x)
    quo = num.divide(den)
    assert quo is not None, "Gaussian binomial failed to divide exactly"
    return quo


def gaussian_binomial_rat(a: int, b: int, var) -> RatFun:
    """Gaussian binomial at an arbitrary rational base (e.g. ``X^-1``)."""
    base = _base(var)
    if base.is_poly():
        return RatFun(gaussian_binomial(a, b, base))
    return substitute(RatFun(gaussian_binomial(a, b, "X")), {"X": base})


@dataclass(frozen=True)
class SubsetIndex:
    """A subset ``I = {i_1 < ... < i_l}`` of ``{0, ..., n-1}``."""

    n: int
    elements: tuple = ()

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.n < 1:
            raise DomainError("n must be positive")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise DomainError(f"elements must be strictly increasing: {els}")
        if els and (els[0] < 0 or els[-1] > self.n - 1):
            raise DomainError(f"elements must lie in [0, {self.n - 1}]")

    @classmethod
    def all(cls, n: int, *, include_zero: bool = True):
        pool = range(0 if include_zero else 1, n)
        for k in range(len(pool) + 1):
            for c in combinations(pool, k):
                yield cls(n, c)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def l(self) -> int:
        return len(self.elements)

    def i(self, j: int) -> int:
        """``i_j`` with ``i_0 = 0`` and ``i_{l+1} = n``."""
        if j == 0:
            return 0
        if j == self.l + 1:
            return self.n
        return self.elements[j - 1]

    @property
    def first(self) -> int:
        """``i_1``; equals ``n`` for the empty set."""
        return self.i(1)

    @property
    def mus(self) -> tuple:
        """``(mu_0, ..., mu_l)`` with ``mu_j = i_{j+1} - i_j``."""
        return tuple(self.i(j + 1) - self.i(j) for j in range(self.l + 1))

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def q_multinomial(idx: SubsetIndex, var="X"):
    """``binom(n, I)_var`` as the chain of Gaussian binomials.

    Returns a Poly for a polynomial base and a RatFun otherwise.
    """
    out = RatFun(1)
    chain = [idx.n] + list(reversed(idx.elements))
    for a, b in zip(chain, chain[1:]):
        out = out * gaussian_binomial_rat(a, b, var)
    return out.as_poly() if _base(var).is_poly() else out


def pochhammer(base, step, k: int) -> RatFun:
    """``(base; step)_k = prod_{i<k} (1 - base * step^i)``."""
    if k < 0:
        raise DomainError("pochhammer length must be nonnegative")
    base, step = rat(base), rat(step)
    out = RatFun(1)
    s = RatFun(1)
    for _ in range(k):
        out = out * (1 - base * s)
        s = s * step
    return out


def gp_subset_sum(n: int, coeff: Callable[[SubsetIndex], RatFun], geo: Callable[[int], RatFun],
                  subsets: Iterable[SubsetIndex] | None = None) -> RatFun:
    """``sum_I coeff(I) * prod_{i in I} gp(geo(i))`` on the denominator ``prod_i (1 - geo(i))``.

    The shared denominator keeps the additive formulas from exploding;
    it is a plain restatement of the sum, nothing is cancelled.
    """
    subsets = list(SubsetIndex.all(n) if subsets is None else subsets)
    used = sorted({i for I in subsets for i in I})
    g = {i: rat(geo(i)) for i in used}
    one_minus = {i: g[i].den - g[i].num for i in used}
    pieces = []
    for I in subsets:
        c = rat(coeff(I))
        if c.is_zero():
            continue
        num = c.num
        den = c.den
        for i in used:
            if i in I.elements:
                num = num * g[i].num
            else:
                num = num * one_minus[i]
            den = den * g[i].den
        pieces.append(RatFun(num, den))
    common = Poly.const(1)
    for i in used:
        common = common * one_minus[i]
    total = rat_sum(pieces)
    return RatFun(total.num, total.den * common)


# -- rendering and parsing -----------------------------------------------

def _render_mono(e) -> str:
    parts = []
    for v, k in zip(VARS, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for n, (e, c) in enumerate(p.sorted_terms()):
        mono = _render_mono(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def render(f) -> str:
    """Text form, terms ascending in graded-lex order, e.g. ``(1 - t)/(1 - q*t)``."""
    if isinstance(f, Poly):
        return render_poly(f)
    f = rat(f)
    if f.is_poly():
        return render_poly(f.num)
    return f"({render_poly(f.num)})/({render_poly(f.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\*\*|[-+*/^()]))")


def parse(text: str) -> RatFun:
    """Parse the textual grammar produced by :func:`render` (plus ``/``, ``**``)."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse near {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            toks.append(("int", int(m.group(1))))
        elif m.group(2):
            toks.append(("var", m.group(2)))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op))
    toks.append(("end", None))
    p = _Parser(toks)
    out = p.expr()
    if p.peek() != ("end", None):
        raise AlgebraError(f"trailing input in {text!r}")
    return out


class _Parser:
    def __init__(self, toks):
        self.toks, self.i = toks, 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, k = self.take()
            if kind != "int":
                raise AlgebraError("exponent must be an integer")
            return base ** (sign * k)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return RatFun(val)
        if kind == "var":
            if val not in _INDEX:
                raise AlgebraError(f"unknown variable {val!r}")
            return RatFun.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise AlgebraError("missing ')'")
            return inner
        raise AlgebraError(f"unexpected token {val!r}")


# -- identities ----------------------------------------------------------

IDENTITY_KINDS = ("q_binomial", "binomial_A", "multinomial_B", "typeH")


def _X(k: int) -> RatFun:
    return RatFun.monomial({"X": k})


def identity_sides(kind: str, n: int) -> tuple[RatFun, RatFun]:
    """Both sides of one of the q-series identities as rational functions."""
    if n < 1:
        raise DomainError("n must be positive")
    X, Y, Z = RatFun.var("X"), RatFun.var("Y"), RatFun.var("Z")
    Xinv = _X(-1)
    if kind == "q_binomial":
        lhs = pochhammer(Z * Y, X, n)
        rhs = rat_sum(
            RatFun(gaussian_binomial(n, j, "X")) * Z ** j * pochhammer(Z, X, n - j) * pochhammer(Y, X, j)
            for j in range(n + 1))
        return lhs, rhs
    if kind == "binomial_A":
        subsets = list(SubsetIndex.all(n, include_zero=False))
        first = gp_subset_sum(n, lambda I: q_multinomial(I, Xinv),
                              lambda i: (_X(i) * Z) ** (n - i), subsets)
        second = gp_subset_sum(n, lambda I: q_multinomial(I, Xinv),
                               lambda i: (_X(n - i) * Z) ** i, subsets)
        closed = (1 - Z ** n) / pochhammer(Z, X, n)
        if not rat_equal(first, second):
            return first, second
        return first, closed
    if kind == "multinomial_B":
        lhs = gp_subset_sum(
            n,
            lambda I: q_multinomial(I, Xinv) * pochhammer(Y * _X(-I.first - 1), Xinv, n - I.first),
            lambda i: (_X(i) * Z) ** (n - i))
        rhs = pochhammer(_X(-n) * Y * Z, X, n) / pochhammer(Z, X, n)
        return lhs, rhs
    if kind == "typeH":
        m, eps = divmod(n, 2)

        def coeff(I):
            c = pochhammer(_X(-2 * (I.first + 1)), _X(-2), n - I.first)
            for mu in I.mus[1:]:
                c = c / pochhammer(_X(-4), _X(-4), mu // 2)
            return c

        lhs = gp_subset_sum(n, coeff, lambda i: (_X(i) * Z) ** (n - i))
        rhs = ((1 - _X(-n - 1) * Z) / (1 - _X(n - 1) * Z)
               * pochhammer(_X(2 * (1 - n)) * Z ** 2, _X(4), m)
               / pochhammer(_X(2 * eps) * Z ** 2, _X(4), m))
        return lhs, rhs
    raise DomainError(f"unknown identity kind {kind!r}; expected one of {IDENTITY_KINDS}")


def verify_identity(kind: str, n: int) -> bool:
    """Expand both sides of the named identity and compare exactly."""
    if n > 8:
        raise DomainError("verify_identity supports n <= 8")
    lhs, rhs = identity_sides(kind, n)
    return rat_equal(lhs, rhs)
