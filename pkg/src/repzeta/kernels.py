"""Backend selection and box scheduling for the enumeration kernel.

The compiled extension is used when importable; setting the environment
variable ``REPZETA_PURE_PYTHON=1`` forces the pure-Python twin.

Primitive vectors are enumerated up to units: ``(Z/p^N)^x`` acts freely on
them and preserves the elementary-divisor type, so it suffices to visit the
vectors whose first unit coordinate is 1 and scale by ``phi(p^N)``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import _kernels_py

if os.environ.get("REPZETA_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def _impl(backend: str | None):
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled.tally_box
    if backend == "python":
        return _kernels_py.tally_box
    raise ValueError(f"unknown backend {backend!r}")


def boxes(d: int, p: int, N: int, *, primitive: bool, normalize: bool = True) -> list:
    """Boxes ``(start, step, count)`` covering the vectors to visit.

    Box ``j`` of the normalized primitive cover holds the vectors whose
    first unit coordinate is ``j`` and equals 1.  Without normalization the
    full box is returned and :func:`tally_types` subtracts the multiples of ``p``.
    """
    M = p ** N
    if not primitive or not normalize:
        return [((0,) * d, (1,) * d, (M,) * d)]
    out = []
    for j in range(d):
        start = (0,) * j + (1,) + (0,) * (d - j - 1)
        step = (p,) * j + (1,) * (d - j)
        count = (M // p,) * j + (1,) + (M,) * (d - j - 1)
        out.append((start, step, count))
    return out


def work(d: int, p: int, N: int, *, primitive: bool, normalize: bool = True) -> int:
    """Number of vectors the kernel visits."""
    total = 0
    for _, _, count in boxes(d, p, N, primitive=primitive, normalize=normalize):
        size = 1
        for c in count:
            size *= c
        total += size
    return total


def _split(box, jobs: int) -> list:
    """Cut a box along its widest coordinate into about ``jobs`` pieces."""
    start, step, count = box
    c = max(range(len(count)), key=lambda i: count[i])
    n = count[c]
    k = min(jobs, n)
    out = []
    for a, b in zip([n * i // k for i in range(k + 1)], [n * i // k for i in range(1, k + 1)]):
        if b > a:
            s = list(start)
            s[c] = start[c] + step[c] * a
            cnt = list(count)
            cnt[c] = b - a
            out.append((tuple(s), step, tuple(cnt)))
    return out


def _merge(parts, scale: int = 1) -> dict:
    out: dict = {}
    for part in parts:
        for k, v in part.items():
            out[k] = out.get(k, 0) + v * scale
    return out


def _run(args):
    backend, rest = args
    return _impl(backend)(*rest)


def tally_types(template, d: int, p: int, N: int, *, primitive: bool, jobs: int = 1,
                backend: str | None = None, normalize: bool = True) -> dict:
    """Histogram ``{sorted capped valuations: count}`` over (Z/p^N)^d.

    ``template`` is ``(r, idx, sgn)`` describing the ``r x r`` matrix built
    from a coordinate vector.  With ``primitive`` only vectors not divisible
    by ``p`` are counted.  ``normalize=False`` switches off the unit
    reduction (useful for cross-checks).  With ``jobs > 1`` the work is split
    across worker processes.
    """
    r, idx, sgn = template
    if N == 0:
        return {(0,) * r: 1}
    M = p ** N
    backend = backend or BACKEND
    _impl(backend)
    idx, sgn = list(idx), list(sgn)
    bx = boxes(d, p, N, primitive=primitive, normalize=normalize)
    if jobs > 1:
        bx = [piece for b in bx for piece in _split(b, jobs)]
    tasks = [(backend, (r, idx, sgn, d, p, N, s, t, c)) for s, t, c in bx]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_run, tasks))
    else:
        parts = [_run(task) for task in tasks]
    if primitive and normalize:
        return _merge(parts, M - M // p)
    hist = _merge(parts)
    if primitive:
        # subtract the vectors divisible by p
        multiples = _run((backend, (r, idx, sgn, d, p, N, (0,) * d, (p,) * d, (M // p,) * d)))
        for k, v in multiples.items():
            hist[k] -= v
            if not hist[k]:
                del hist[k]
    return hist
