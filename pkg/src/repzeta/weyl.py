"""Signed permutations (type B) and permutations (type A) with their statistics.

Elements of B_n are stored in window notation ``[w(1), ..., w(n)]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterator, Mapping

from .qalg import (
    NVARS,
    VARS,
    DomainError,
    Poly,
    RatFun,
    SubsetIndex,
    pochhammer,
    q_multinomial,
    rat_equal,
)

MAX_N = 7


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SignedPerm:
    window: tuple

    def __post_init__(self):
        w = tuple(self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(a) for a in w) != list(range(1, len(w) + 1)):
            raise DomainError(f"{w} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        if x == 0:
            return 0
        return self.window[x - 1] if x > 0 else -self.window[-x - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        # (self * other)(i) = self(other(i))
        return SignedPerm(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


@dataclass(frozen=True)
class StatRecord:
    length: int
    neg: int
    descents: tuple
    sigma: int
    rmaj: int
    L: int

    def as_dict(self) -> dict:
        return {"l": self.length, "neg": self.neg, "D": list(self.descents),
                "sigma": self.sigma, "rmaj": self.rmaj, "L": self.L}


def identity(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(1, n + 1)))


def generator(n: int, i: int) -> SignedPerm:
    """Coxeter generator ``s_0 = [-1, 2, ..., n]`` or the transposition ``s_i`` of ``i, i+1``."""
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPerm(tuple(w))


def enumerate_signed_perms(n: int) -> Iterator[SignedPerm]:
    if n < 1:
        raise DomainError("n must be positive")
    if n > MAX_N:
        raise ResourceError(f"B_{n} has {2 ** n} * {n}! elements; limit is n <= {MAX_N}")
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPerm(tuple(s * a for s, a in zip(signs, perm)))


def length(w) -> int:
    a = w.window if isinstance(w, SignedPerm) else tuple(w)
    n = len(a)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])
    return inv + sum(-x for x in a if x < 0)


def descents(w) -> tuple:
    a = w.window if isinstance(w, SignedPerm) else tuple(w)
    out = [0] if a[0] < 0 else []
    out += [i for i in range(1, len(a)) if a[i - 1] > a[i]]
    return tuple(out)


def L_statistic(w) -> int:
    """Half the number of pairs ``x < y`` in ``[+-n]_0`` of opposite parity with ``w(x) > w(y)``."""
    w = w if isinstance(w, SignedPerm) else SignedPerm(tuple(w))
    n = w.n
    pts = range(-n, n + 1)
    vals = {x: w(x) for x in pts}
    count = sum(1 for x in pts for y in pts
                if x < y and (x - y) % 2 and vals[x] > vals[y])
    if count % 2:
        raise AssertionError(f"odd pair count {count} for {w}")
    return count // 2


def stats(w: SignedPerm) -> StatRecord:
    n = w.n
    D = descents(w)
    return StatRecord(
        length=length(w),
        neg=sum(1 for a in w.window if a < 0),
        descents=D,
        sigma=sum(n * n - i * i for i in D),
        rmaj=sum(n - i for i in D),
        L=L_statistic(w),
    )


@lru_cache(maxsize=8)
def _all_stats(n: int) -> tuple:
    return tuple((w, stats(w)) for w in enumerate_signed_perms(n))


def stat_table(n: int) -> list[dict]:
    return [dict(window=list(w.window), **s.as_dict()) for w, s in _all_stats(n)]


# -- generating functions ------------------------------------------------

Weight = Callable[[StatRecord], tuple]


def _laurent_to_ratfun(acc: Mapping[tuple, int]):
    r = RatFun.from_laurent(acc)
    return r.num if r.is_poly() else r


def _exp(**k) -> tuple:
    e = [0] * NVARS
    for v, x in k.items():
        e[VARS.index(v)] = x
    return tuple(e)


WEIGHTS: dict[str, Weight] = {
    "X^l Y^neg": lambda s: (1, _exp(X=s.length, Y=s.neg)),
    "(-1)^l X^L": lambda s: ((-1) ** s.length, _exp(X=s.L)),
    "X^l": lambda s: (1, _exp(X=s.length)),
    "(-1)^neg X^l": lambda s: ((-1) ** s.neg, _exp(X=s.length)),
}


def f_F_weight(delta: int) -> Weight:
    return lambda s: ((-1) ** s.neg, _exp(X=2 * s.length + (2 * delta - 1) * s.neg))


def descent_class_gf(n: int, I: SubsetIndex, weight) -> Poly | RatFun:
    """Sum of ``weight(w)`` over ``w`` in ``B_n`` with ``D(w)`` contained in ``I``.

    ``weight`` is a callable returning ``(sign, exponent_vector)`` or a key of
    :data:`WEIGHTS`.  Negative exponents give a RatFun.
    """
    if isinstance(weight, str):
        weight = WEIGHTS[weight]
    allowed = set(I.elements)
    acc: dict = {}
    for _, s in _all_stats(n):
        if allowed.issuperset(s.descents):
            c, e = weight(s)
            acc[e] = acc.get(e, 0) + c
    return _laurent_to_ratfun(acc)


def _X(k: int) -> RatFun:
    return RatFun.monomial({"X": k})


def verify_reiner(n: int, I: SubsetIndex) -> bool:
    lhs = descent_class_gf(n, I, "X^l Y^neg")
    Y = RatFun.var("Y")
    rhs = q_multinomial(I, "X") * pochhammer(-Y * _X(I.first + 1), "X", n - I.first)
    return rat_equal(RatFun(lhs), rhs)


def verify_f_formulas(n: int, delta: int, I: SubsetIndex) -> bool:
    from .schemes import F, G, f_poly
    f_F = descent_class_gf(n, I, f_F_weight(delta))
    f_G = descent_class_gf(n, I, "(-1)^neg X^l")
    return (rat_equal(RatFun(f_F), f_poly(F(n, delta), I))
            and rat_equal(RatFun(f_G), f_poly(G(n), I)))


def is_proved_L_case(n: int, I: SubsetIndex) -> bool:
    if I.elements in ((0,), tuple(range(n))):
        return True
    return n % 2 == 0 and all(i % 2 == 0 for i in I.elements)


def conjecture_L_report(n: int) -> dict:
    """Compare ``sum (-1)^l X^L`` over descent classes with ``f_{H_n, I}``."""
    from .qalg import render
    from .schemes import H, f_poly
    out = {}
    for I in SubsetIndex.all(n):
        lhs = RatFun(descent_class_gf(n, I, "(-1)^l X^L"))
        rhs = f_poly(H(n), I)
        match = rat_equal(lhs, rhs)
        out[str(I)] = {
            "match": match,
            "proved_case": is_proved_L_case(n, I),
            "brute_force": render(lhs),
            "f_poly": render(rhs),
        }
    return out


def joint_distribution_B(n: int):
    """Both sides of the joint distribution of ``(sigma - l, neg, rmaj)`` over B_n."""
    acc: dict = {}
    for _, s in _all_stats(n):
        e = _exp(X=s.sigma - s.length, Y=s.neg, Z=s.rmaj)
        acc[e] = acc.get(e, 0) + 1
    lhs = RatFun.from_laurent(acc)
    if not lhs.is_poly():
        raise AssertionError("joint distribution over B_n is not a polynomial")
    Y, Z = RatFun.var("Y"), RatFun.var("Z")
    rhs = RatFun(1)
    for i in range(n):
        rhs = rhs * (1 + _X(i) * Y * Z) * (1 - (_X(n + i) * Z) ** (n - i)) / (1 - _X(n + i) * Z)
    return lhs, rhs


def verify_joint_distribution_B(n: int) -> bool:
    return rat_equal(*joint_distribution_B(n))


def sn_statistics(perm: tuple) -> dict:
    n = len(perm)
    D = [i for i in range(1, n) if perm[i - 1] > perm[i]]
    return {
        "length": sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]),
        "descents": D,
        "sigma": sum(i * (n - i) for i in D),
        "maj": sum(D),
        "rmaj": sum(n - i for i in D),
    }


def verify_Sn_distribution(n: int) -> bool:
    acc_maj: dict = {}
    acc_rmaj: dict = {}
    for perm in permutations(range(1, n + 1)):
        s = sn_statistics(perm)
        for acc, key in ((acc_maj, "maj"), (acc_rmaj, "rmaj")):
            e = _exp(X=s["sigma"] - s["length"], Z=s[key])
            acc[e] = acc.get(e, 0) + 1
    Z = RatFun.var("Z")
    rhs = RatFun(1)
    for i in range(n):
        rhs = rhs * (1 - (_X(i) * Z) ** (n - i)) / (1 - _X(i) * Z)
    return all(rat_equal(RatFun.from_laurent(acc), rhs) for acc in (acc_maj, acc_rmaj))


def distribution_L_sides(n: int):
    """Both sides of the L-distribution identity with ``X`` standing for ``V = X^{1/2}``."""
    acc: dict = {}
    for _, s in _all_stats(n):
        doubled = s.sigma + s.rmaj
        if doubled % 2:
            raise AssertionError("sigma + rmaj is odd")
        e = _exp(X=doubled - 2 * s.L, Z=s.rmaj)
        acc[e] = acc.get(e, 0) + (-1) ** s.length
    lhs = RatFun.from_laurent(acc)
    m, eps = divmod(n, 2)
    Z = RatFun.var("Z")
    rhs = ((1 - Z) * pochhammer(_X(4) * Z ** 2, _X(4), m)
           / pochhammer(_X(2 * (2 * (m + eps) + 1)) * Z ** 2, _X(4), m))
    for i in range(n - 1):
        rhs = rhs * (1 - (_X(n + i + 1) * Z) ** (n - i))
    return lhs, rhs


def verify_distribution_L(n: int) -> bool:
    if n > 5:
        raise DomainError("verify_distribution_L supports n <= 5")
    return rat_equal(*distribution_L_sides(n))


def length_oracle_bfs(n: int) -> dict:
    """Word length of every element from breadth-first search on Coxeter generators."""
    if n > 5:
        raise DomainError("BFS oracle supports n <= 5")
    gens = [generator(n, i) for i in range(n)]
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = w * s
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def poincare_polynomial_B(n: int) -> Poly:
    """``prod_{i=1}^n (1 - X^{2i}) / (1 - X)``, i.e. the product of ``[2i]_X``."""
    X = Poly.var("X")
    acc = Poly.const(1)
    for i in range(1, n + 1):
        acc = acc * sum((X ** k for k in range(2 * i)), Poly())
    return acc
