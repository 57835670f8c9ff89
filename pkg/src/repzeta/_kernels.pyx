# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernel: capped elementary-divisor profiles over Z/p^N."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    MAXR = 12
    MAXD = 40


cdef inline void _capped_valuations(int* a, int r, int N, int M,
                                    const int* val, const int* inv, const int* mul,
                                    const int* quot, int* caps) noexcept nogil:
    cdef int k, i, j, best, bi, bj, v, tmp, uinv, b, f
    cdef const int* mrow
    for k in range(r):
        best = N
        bi = -1
        bj = -1
        for i in range(k, r):
            for j in range(k, r):
                v = val[a[i * r + j]]
                if v < best:
                    best = v
                    bi = i
                    bj = j
                    if v == 0:
                        break
            if best == 0:
                break
        if bi < 0:
            for i in range(k, r):
                caps[i] = N
            return
        caps[k] = best
        if bi != k:
            for j in range(r):
                tmp = a[k * r + j]
                a[k * r + j] = a[bi * r + j]
                a[bi * r + j] = tmp
        if bj != k:
            for i in range(r):
                tmp = a[i * r + k]
                a[i * r + k] = a[i * r + bj]
                a[i * r + bj] = tmp
        uinv = inv[quot[best * M + a[k * r + k]]]
        for i in range(k + 1, r):
            b = a[i * r + k]
            if b:
                f = mul[quot[best * M + b] * M + uinv]
                mrow = mul + f * M
                for j in range(k, r):
                    tmp = a[i * r + j] - mrow[a[k * r + j]]
                    if tmp < 0:
                        tmp += M
                    a[i * r + j] = tmp


def tally_box(int r, idx, sgn, int d, int p, int N, start, step, count):
    """Histogram of capped valuation profiles over a box of vectors in (Z/p^N)^d.

    See the pure-Python twin for the meaning of the arguments.
    """
    if r > MAXR or d > MAXD:
        raise ValueError("matrix or coordinate count too large for the kernel")
    if N < 1:
        raise ValueError("N must be positive")
    if (N + 1) ** r > 50_000_000:
        raise ValueError("profile table too large for the kernel")
    if p ** N > 46340:
        raise ValueError("modulus too large for the kernel")
    cdef int M = p ** N
    cdef int ncodes = (N + 1) ** r
    cdef int k, c, i, v, y
    cdef int idx_c[MAXR * MAXR]
    cdef int sgn_c[MAXR * MAXR]
    cdef int st[MAXD]
    cdef int sp[MAXD]
    cdef int cnt[MAXD]
    cdef int pos[MAXD]
    cdef int x[MAXD]
    cdef int a[MAXR * MAXR]
    cdef int caps[MAXR]
    for k in range(r * r):
        idx_c[k] = idx[k]
        sgn_c[k] = sgn[k]
    for k in range(d):
        st[k] = start[k] % M
        sp[k] = step[k]
        cnt[k] = count[k]
        if cnt[k] <= 0:
            return {}
    cdef int* val = <int*> malloc(M * sizeof(int))
    cdef int* inv = <int*> calloc(M, sizeof(int))
    cdef int* mul = <int*> malloc(M * M * sizeof(int))
    cdef int* quot = <int*> malloc((N + 1) * M * sizeof(int))
    cdef long long* counts = <long long*> calloc(ncodes, sizeof(long long))
    if val == NULL or inv == NULL or mul == NULL or quot == NULL or counts == NULL:
        free(val); free(inv); free(mul); free(quot); free(counts)
        raise MemoryError()
    cdef int pw = 1
    val[0] = N
    for y in range(1, M):
        v = 0
        c = y
        while c % p == 0:
            c //= p
            v += 1
        val[y] = v
        if v == 0:
            inv[y] = pow(int(y), -1, int(M))
    for y in range(M):
        for c in range(M):
            mul[y * M + c] = (y * c) % M
    for k in range(N + 1):
        for y in range(M):
            quot[k * M + y] = y // pw
        pw *= p
    cdef long long code, base
    cdef int e
    cdef bint done = False
    try:
        with nogil:
            for i in range(d):
                pos[i] = 0
                x[i] = st[i]
            while not done:
                for k in range(r * r):
                    c = idx_c[k]
                    if c < 0:
                        a[k] = 0
                    else:
                        e = x[c] if sgn_c[k] > 0 else M - x[c]
                        if e >= M:
                            e -= M
                        a[k] = e
                _capped_valuations(a, r, N, M, val, inv, mul, quot, caps)
                code = 0
                base = 1
                for k in range(r):
                    code += caps[k] * base
                    base *= (N + 1)
                counts[code] += 1
                # odometer, last coordinate fastest
                i = d - 1
                while True:
                    pos[i] += 1
                    if pos[i] < cnt[i]:
                        x[i] = (x[i] + sp[i]) % M
                        break
                    pos[i] = 0
                    x[i] = st[i]
                    if i == 0:
                        done = True
                        break
                    i -= 1
        out = {}
        for code in range(ncodes):
            if counts[code]:
                key = []
                e = <int> code
                for k in range(r):
                    key.append(e % (N + 1))
                    e //= (N + 1)
                out[tuple(key)] = counts[code]
        return out
    finally:
        free(val)
        free(inv)
        free(mul)
        free(quot)
        free(counts)
