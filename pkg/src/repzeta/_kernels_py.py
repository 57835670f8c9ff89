"""Pure-Python implementation of the enumeration kernel.

Same interface and algorithm as the compiled ``_kernels`` module; it is
used when the extension is unavailable or ``REPZETA_PURE_PYTHON`` is set.
"""
from __future__ import annotations

from itertools import product


def local_tables(p: int, N: int):
    """Valuation table (0 maps to N) and unit inverses modulo ``p^N``."""
    M = p ** N
    val = [N] * M
    inv = [0] * M
    for x in range(1, M):
        v, y = 0, x
        while y % p == 0:
            y //= p
            v += 1
        val[x] = v
        if v == 0:
            inv[x] = pow(x, -1, M)
    return val, inv


def capped_valuations(a: list, r: int, p: int, N: int, val, inv, pw) -> list:
    """Sorted elementary-divisor valuations of the ``r x r`` matrix ``a`` over Z/p^N.

    ``a`` is a flat row-major list of residues and is destroyed.
    """
    M = pw[N]
    caps = []
    for k in range(r):
        best, bi, bj = N, -1, -1
        for i in range(k, r):
            row = i * r
            for j in range(k, r):
                v = val[a[row + j]]
                if v < best:
                    best, bi, bj = v, i, j
                    if v == 0:
                        break
            if best == 0:
                break
        if bi < 0:
            caps.extend([N] * (r - k))
            return caps
        caps.append(best)
        if bi != k:
            for j in range(r):
                a[k * r + j], a[bi * r + j] = a[bi * r + j], a[k * r + j]
        if bj != k:
            for i in range(r):
                a[i * r + k], a[i * r + bj] = a[i * r + bj], a[i * r + k]
        piv = pw[best]
        uinv = inv[a[k * r + k] // piv]
        krow = k * r
        for i in range(k + 1, r):
            b = a[i * r + k]
            if b:
                f = (b // piv) * uinv % M
                irow = i * r
                for j in range(k, r):
                    a[irow + j] = (a[irow + j] - f * a[krow + j]) % M
    return caps


def tally_box(r: int, idx, sgn, d: int, p: int, N: int, start, step, count) -> dict:
    """Histogram of capped valuation profiles over a box of vectors in (Z/p^N)^d.

    Coordinate ``c`` runs through ``start[c] + step[c] * k`` for ``k < count[c]``.
    ``idx[e]``/``sgn[e]`` give the coordinate (or -1 for zero) and sign of
    flat matrix entry ``e``.
    """
    M = p ** N
    val, inv = local_tables(p, N)
    pw = [p ** k for k in range(N + 1)]
    entries = list(zip(idx, sgn))
    ranges = [range(s, s + t * c, t) if c else range(0) for s, t, c in zip(start, step, count)]
    out: dict = {}
    for x in product(*ranges):
        a = [0 if c < 0 else (s * x[c]) % M for c, s in entries]
        key = tuple(capped_valuations(a, r, p, N, val, inv, pw))
        out[key] = out.get(key, 0) + 1
    return out
