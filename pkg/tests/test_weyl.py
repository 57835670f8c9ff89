import pytest

from repzeta import weyl
from repzeta.qalg import RatFun, SubsetIndex, parse, rat_equal
from repzeta.weyl import SignedPerm


def test_enumeration_sizes():
    assert {w.window for w in weyl.enumerate_signed_perms(1)} == {(1,), (-1,)}
    assert sum(1 for _ in weyl.enumerate_signed_perms(2)) == 8
    assert sum(1 for _ in weyl.enumerate_signed_perms(4)) == 384
    with pytest.raises(weyl.ResourceError):
        next(weyl.enumerate_signed_perms(weyl.MAX_N + 1))


def test_stats_examples():
    s = weyl.stats(SignedPerm((-1,)))
    assert (s.length, s.neg, s.descents, s.sigma, s.rmaj, s.L) == (1, 1, (0,), 1, 1, 1)
    s = weyl.stats(weyl.identity(3))
    assert (s.length, s.neg, s.descents, s.sigma, s.rmaj, s.L) == (0, 0, (), 0, 0, 0)
    s = weyl.stats(SignedPerm((2, 1)))
    assert (s.length, s.neg, s.descents, s.sigma, s.rmaj) == (1, 0, (1,), 3, 1)


def test_invalid_signed_perm():
    with pytest.raises(Exception):
        SignedPerm((1, 1))


def test_descent_class_examples():
    assert rat_equal(RatFun(weyl.descent_class_gf(1, SubsetIndex(1, (0,)), "X^l Y^neg")), parse("1+X*Y"))
    assert rat_equal(RatFun(weyl.descent_class_gf(1, SubsetIndex(1, ()), "X^l")), RatFun(1))
    assert rat_equal(RatFun(weyl.descent_class_gf(1, SubsetIndex(1, (0,)), "(-1)^l X^L")), parse("1-X"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reiner_and_f_formulas(n):
    for I in SubsetIndex.all(n):
        assert weyl.verify_reiner(n, I)
        assert weyl.verify_f_formulas(n, 0, I)
        assert weyl.verify_f_formulas(n, 1, I)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_joint_distribution(n):
    assert weyl.verify_joint_distribution_B(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sn_distribution(n):
    assert weyl.verify_Sn_distribution(n)


def test_bfs_lengths():
    d = weyl.length_oracle_bfs(2)
    assert d[SignedPerm((-1, 2))] == 1
    assert d[SignedPerm((-2, -1))] == 3
    assert d[SignedPerm((-1, -2))] == 4
    assert max(d.values()) == 4
    for n in (1, 2, 3, 4):
        for w, v in weyl.length_oracle_bfs(n).items():
            assert weyl.length(w) == v


def test_poincare_polynomial():
    for n in (1, 2, 3):
        gf = RatFun(weyl.descent_class_gf(n, SubsetIndex(n, tuple(range(n))), "X^l"))
        assert rat_equal(gf, RatFun(weyl.poincare_polynomial_B(n)))


def test_conjecture_L_proved_cases():
    for n in (1, 2, 3, 4):
        for key, row in weyl.conjecture_L_report(n).items():
            if row["proved_case"]:
                assert row["match"], (n, key)


def test_distribution_L_small():
    assert weyl.verify_distribution_L(1)
