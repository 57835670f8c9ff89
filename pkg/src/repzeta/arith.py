"""Global Dirichlet coefficients over Q.

Two routes: Dirichlet convolution of the arithmetic functions
``n^a J_b(n)`` (one per quotient ``zeta(s-a-b)/zeta(s-a)``) and
multiplicative assembly from the local Euler factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .qalg import DomainError
from .schemes import GroupScheme, local_coefficients


@dataclass(frozen=True)
class DirichletCoeffs:
    """Coefficients ``r_1..r_B``; ``coeffs[k]`` is ``r_{k+1}``."""

    coeffs: tuple
    bound: int

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.bound:
            raise IndexError(n)
        return self.coeffs[n - 1]

    def as_list(self) -> list:
        return list(self.coeffs)

    def is_multiplicative(self) -> bool:
        B = self.bound
        if B >= 1 and self.coeffs[0] != 1:
            return False
        for m in range(2, B + 1):
            for n in range(m + 1, B // m + 1):
                if gcd(m, n) == 1 and self[m * n] != self[m] * self[n]:
                    return False
        return True


def smallest_prime_factors(bound: int) -> list:
    spf = list(range(bound + 1))
    for i in range(2, int(bound ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, bound + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def primes_up_to(bound: int) -> list:
    spf = smallest_prime_factors(bound)
    return [p for p in range(2, bound + 1) if spf[p] == p]


def factorize(n: int) -> dict:
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def jordan_totient(b: int, n: int) -> int:
    """``J_b(n) = n^b prod_{p | n} (1 - p^-b)``."""
    if b < 1 or n < 1:
        raise DomainError("jordan_totient needs positive arguments")
    out = 1
    for p, e in factorize(n).items():
        out *= p ** (e * b) - p ** ((e - 1) * b)
    return out


def dirichlet_convolve(f: list, g: list) -> list:
    """Dirichlet convolution of sequences indexed from 1 (position 0 is ``n = 1``)."""
    B = len(f)
    out = [0] * B
    for d in range(1, B + 1):
        fd = f[d - 1]
        if fd:
            for k in range(1, B // d + 1):
                out[d * k - 1] += fd * g[k - 1]
    return out


def dirichlet_from_quotients(pairs, bound: int) -> DirichletCoeffs:
    """Product over ``(a, b)`` of ``zeta(s-a-b)/zeta(s-a)`` as coefficients up to ``bound``."""
    if bound < 1:
        raise DomainError("bound must be positive")
    acc = [1] + [0] * (bound - 1)
    for a, b in pairs:
        acc = dirichlet_convolve(acc, [n ** a * jordan_totient(b, n) for n in range(1, bound + 1)])
    return DirichletCoeffs(tuple(acc), bound)


def dirichlet_from_quotient_data(data: dict, bound: int) -> DirichletCoeffs:
    """Like :func:`dirichlet_from_quotients` but also folds in the factors in ``2s``.

    ``zeta(2s-c1)/zeta(2s-c2)`` has coefficient ``k^c2 J_{c1-c2}(k)`` at ``n = k^2``
    and zero off the squares.
    """
    acc = list(dirichlet_from_quotients(data["pairs"], bound).coeffs)
    for c1, c2 in data["doubled"]:
        seq = [0] * bound
        k = 1
        while k * k <= bound:
            seq[k * k - 1] = k ** c2 * jordan_totient(c1 - c2, k)
            k += 1
        acc = dirichlet_convolve(acc, seq)
    return DirichletCoeffs(tuple(acc), bound)


def quotient_pairs(g: GroupScheme) -> list:
    """``(a, b)`` for each factor ``zeta(s-a-b)/zeta(s-a)`` (for H only the single-s factor)."""
    return quotient_data(g)["pairs"]


def quotient_data(g: GroupScheme) -> dict:
    """Quotient data of the global zeta function.

    ``pairs`` lists ``(a, b)`` for factors ``zeta(s-a-b)/zeta(s-a)``.  For
    type H the factors in ``2s`` are listed separately under ``doubled`` as
    ``(c_num, c_den)`` meaning ``zeta(2s-c_num)/zeta(2s-c_den)``.
    """
    n, d = g.n, g.delta
    if g.kind == "G":
        return {"pairs": [(i, n) for i in range(n)], "doubled": []}
    if g.kind == "F":
        return {"pairs": [(2 * i, 2 * (n + d) - 1) for i in range(n)], "doubled": []}
    m, eps = divmod(n, 2)
    return {"pairs": [(0, n)],
            "doubled": [(2 * (m + i + eps) + 1, 2 * (i + 1)) for i in range(m)]}


def global_coeffs_from_local(g: GroupScheme, bound: int) -> DirichletCoeffs:
    """Assemble ``r_n`` from the local coefficients at every prime ``p <= bound``."""
    if not 1 <= bound <= 10 ** 5:
        raise DomainError("bound must lie in [1, 10^5]")
    local = {}
    for p in primes_up_to(bound):
        e, pk = 0, 1
        while pk * p <= bound:
            pk *= p
            e += 1
        local[p] = local_coefficients(g, p, e)
    spf = smallest_prime_factors(bound)
    out = [0] * bound
    out[0] = 1
    for n in range(2, bound + 1):
        p = spf[n]
        m, e = n, 0
        while m % p == 0:
            m //= p
            e += 1
        out[n - 1] = local[p][e] * out[m - 1]
    return DirichletCoeffs(tuple(out), bound)


def euler_phi_sieve(bound: int) -> list:
    """Euler's totient for ``1..bound`` by the classical sieve."""
    phi = list(range(bound + 1))
    for i in range(2, bound + 1):
        if phi[i] == i:
            for j in range(i, bound + 1, i):
                phi[j] -= phi[j] // i
    return phi[1:]
