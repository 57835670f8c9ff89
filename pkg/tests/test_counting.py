import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from repzeta import counting, kernels, qalg, schemes
from repzeta.counting import Alt, Mat, Sym
from repzeta.qalg import SubsetIndex
from repzeta.schemes import F, G, H


def test_rank_count_examples():
    assert counting.rank_count_closed(Mat(2), 1, 2) == 9
    assert counting.rank_count_closed(Sym(2), 0, 2) == 4
    assert counting.rank_count_closed(Alt(4), 1, 2) == 35
    assert counting.rank_count_enumerate(Sym(2), 2) == {0: 1, 1: 3, 2: 4}
    assert counting.rank_count_enumerate(Mat(1), 3) == {0: 1, 1: 2}
    assert counting.rank_count_enumerate(Alt(2), 2) == {0: 1, 2: 1}


@pytest.mark.parametrize("space", [Alt(2), Alt(3), Alt(4), Mat(1), Mat(2), Sym(1), Sym(2), Sym(3)], ids=str)
@pytest.mark.parametrize("q", [2, 3, 4])
def test_rank_counts_closed_vs_enumerated(space, q):
    if q ** space.dim > 10 ** 6:
        pytest.skip("large")
    enum = counting.rank_count_enumerate(space, q)
    for i in range(space.n + 1):
        assert enum.get(space.rank_of_index(i), 0) == counting.rank_count_closed(space, i, q)
    assert sum(enum.values()) == q ** space.dim


def test_rank_count_resource_bound():
    with pytest.raises(counting.ResourceError):
        counting.rank_count_enumerate(Mat(3), 3, max_vectors=100)


@pytest.mark.parametrize("g", [G(1), F(1, 0), H(1)], ids=str)
def test_commutator_matrix_rank_one(g):
    assert counting.commutator_matrix(g, [5]) == [[0, 5], [-5, 0]]


def test_elem_div_type_examples():
    t = counting.elem_div_type([[0, 0], [0, 0]], 2, 3)
    assert t.caps == (3, 3) and t.nu == (3,)
    t = counting.elem_div_type([[0, 1], [-1, 0]], 2, 2)
    assert t.caps == (0, 0) and t.nu == (0,)
    t = counting.elem_div_type([[0, 2], [-2, 0]], 2, 2)
    assert t.caps == (1, 1) and t.nu == (1,)


def _random_matrix(rng, r, lo=-20, hi=20):
    return [[rng.randint(lo, hi) for _ in range(r)] for _ in range(r)]


def _unimodular(rng, r):
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    for _ in range(3 * r):
        i, j = rng.sample(range(r), 2) if r > 1 else (0, 0)
        if i != j:
            c = rng.randint(-3, 3)
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    return U


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_smith_diagonal_divisibility_and_invariance():
    rng = random.Random(7)
    for _ in range(60):
        r = rng.randint(1, 4)
        A = _random_matrix(rng, r)
        d = counting.smith_diagonal(A)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))
        B = _matmul(_matmul(_unimodular(rng, r), A), _unimodular(rng, r))
        assert counting.smith_diagonal(B) == d


def test_smith_vs_kernel_on_random_matrices():
    from repzeta import _kernels_py
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randint(1, 5)
        p = rng.choice([2, 3, 5])
        N = rng.randint(1, 3)
        M = p ** N
        A = _random_matrix(rng, r, 0, M - 1)
        val, inv = _kernels_py.local_tables(p, N)
        pw = [p ** k for k in range(N + 1)]
        caps = _kernels_py.capped_valuations([x for row in A for x in row], r, p, N, val, inv, pw)
        assert tuple(caps) == counting.elem_div_type(A, p, N).caps


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_normalized_enumeration_matches_full(backend):
    for g in (G(2), F(1, 1), H(2)):
        t = counting.commutator_template(g)
        for p, N in ((2, 1), (2, 2), (3, 1), (3, 2)):
            a = kernels.tally_types(t, g.d_rank, p, N, primitive=True, backend=backend)
            b = kernels.tally_types(t, g.d_rank, p, N, primitive=True, backend=backend, normalize=False)
            assert a == b
            assert sum(a.values()) == p ** (N * g.d_rank) - p ** ((N - 1) * g.d_rank)


def test_backends_agree():
    if "cython" not in kernels.available_backends():
        pytest.skip("compiled kernel not built")
    for sp in (Mat(2), Sym(3), Alt(4)):
        t = counting.space_template(sp)
        for p, N in ((2, 2), (3, 1)):
            a = kernels.tally_types(t, sp.dim, p, N, primitive=False, backend="cython")
            b = kernels.tally_types(t, sp.dim, p, N, primitive=False, backend="python")
            assert a == b


def test_jobs_split_is_exact():
    t = counting.commutator_template(G(2))
    one = kernels.tally_types(t, 4, 3, 2, primitive=True)
    two = kernels.tally_types(t, 4, 3, 2, primitive=True, jobs=2)
    assert one == two


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, REPZETA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from repzeta import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.sampled_from([2, 3]), st.data())
def test_type_is_unit_invariant(n, p, data):
    g = G(n)
    N = 2
    M = p ** N
    w = data.draw(st.lists(st.integers(0, M - 1), min_size=g.d_rank, max_size=g.d_rank))
    u = data.draw(st.sampled_from([x for x in range(1, M) if x % p]))
    a = counting.elem_div_type(counting.commutator_matrix(g, w), p, N)
    b = counting.elem_div_type(counting.commutator_matrix(g, [u * x for x in w]), p, N)
    assert a == b


def test_count_type_examples():
    # the only primitive vector mod 2 for G_1 has unit entries, so nu = (0)
    assert counting.count_type_closed(G(1), SubsetIndex(1, (0,)), (1,), 2) == 1
    assert counting.count_type_enumerate(G(1), SubsetIndex(1, (0,)), (1,), 2) == 1
    assert counting.count_type_enumerate(H(1), SubsetIndex(1, ()), (), 2) == 1
    I = SubsetIndex(2, (1,))
    assert counting.count_type_closed(F(2, 0), I, (1,), 2) == counting.count_type_enumerate(F(2, 0), I, (1,), 2)


@pytest.mark.parametrize("g", [F(1, 0), F(1, 1), G(1), H(1), F(2, 0), G(2), H(2)], ids=str)
@pytest.mark.parametrize("p", [2, 3])
def test_type_counts_closed_vs_enumerated(g, p):
    for N in (1, 2):
        for I in SubsetIndex.all(g.n):
            for r in counting.compositions(I, N):
                assert counting.count_type_closed(g, I, r, p) == counting.count_type_enumerate(g, I, r, p)


def test_type_histogram_resource_bound():
    with pytest.raises(counting.ResourceError):
        counting.type_histogram(F(2, 1), 3, 2)


@pytest.mark.parametrize("g", [G(1), H(2), G(2), F(2, 0)], ids=str)
def test_truncation_oracle(g):
    assert counting.local_zeta_truncation_oracle(g, 2, 2) == schemes.local_coefficients(g, 2, 2)
    assert counting.local_zeta_truncation_oracle(g, 2, 0) == [1]
    assert counting.local_zeta_truncation_oracle(G(1), 2, 1) == [1, 1]


def test_compositions():
    I = SubsetIndex(3, (0, 2))
    assert sorted(counting.compositions(I, 3)) == [(1, 2), (2, 1)]
    assert list(counting.compositions(SubsetIndex(3, ()), 0)) == [()]
    assert list(counting.compositions(SubsetIndex(3, ()), 1)) == []
