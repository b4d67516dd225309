from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from classconv.class_algebra import f_constant
from classconv.fillings import (Filling, canonical_filling, convolve,
                                enumerate_F, fillings_of_perm,
                                fillings_of_shape, to_partial_perm)
from classconv.partial_perm import PartialPermutation, canonical_rep, product
from classconv.partitions import EMPTY, Partition, enumerate_partitions, partitions_up_to

P = lambda *parts: Partition(parts)


@st.composite
def fillings(draw, max_point=7):
    points = draw(st.sets(st.integers(min_value=1, max_value=max_point),
                          max_size=max_point))
    pts = sorted(points)
    arrangement = draw(st.permutations(pts))
    if not arrangement:
        return Filling(())
    shape = draw(st.sampled_from(enumerate_partitions(len(arrangement))))
    rows = []
    i = 0
    for ln in shape.parts:
        rows.append(arrangement[i:i + ln])
        i += ln
    return Filling(rows)


def test_validation():
    with pytest.raises(ValueError):
        Filling([[1, 2], [3, 4, 5]])
    with pytest.raises(ValueError):
        Filling([[1, 1]])
    with pytest.raises(ValueError):
        Filling([[]])
    with pytest.raises(ValueError):
        Filling([[0]])


def test_to_partial_perm_example():
    f = Filling([[4, 3, 1], [9, 2, 7], [6, 5]])
    assert f.shape == P(3, 3, 2)
    assert f.to_partial_perm() == PartialPermutation.from_cycles(
        [(1, 4, 3), (2, 7, 9), (5, 6)])
    assert Filling([[7]]).to_partial_perm() == PartialPermutation.identity({7})
    assert Filling(()).to_partial_perm() == PartialPermutation()


def test_worked_convolution_example():
    s = Filling.from_string("3,4,5,6,9;2,1,7")
    t = Filling.from_string("4,3,2;1,9,6;8")
    assert convolve(s, t) == Filling.from_string("5,6,7,2;3,1;4;9;8")


def test_convolve_with_empty_left_factor():
    t = Filling.from_string("4,3,2;1,9,6;8")
    got = convolve(Filling(()), t)
    assert got.to_partial_perm() == t.to_partial_perm()
    # reading order regenerates the rows themselves
    assert got == t


def test_canonical_filling():
    assert canonical_filling(P(3, 2)) == Filling([[1, 2, 3], [4, 5]])
    assert canonical_filling(EMPTY) == Filling(())
    for rho in partitions_up_to(5):
        assert canonical_filling(rho).to_partial_perm() == canonical_rep(rho)


@given(fillings(), fillings())
@settings(max_examples=150)
def test_convolution_is_semigroup_homomorphism(s, t):
    assert to_partial_perm(convolve(s, t)) == product(
        to_partial_perm(s), to_partial_perm(t))


@given(fillings(max_point=6), fillings(max_point=6), fillings(max_point=6))
@settings(max_examples=100)
def test_convolution_associative_after_projection(a, b, c):
    left = convolve(convolve(a, b), c)
    right = convolve(a, convolve(b, c))
    assert to_partial_perm(left) == to_partial_perm(right)
    assert left.shape == right.shape


def test_convolution_not_associative_on_the_nose():
    # the written arrangements can differ even though the underlying
    # partial permutations always agree: the row through 3 starts at 3 on
    # one side and at 1 on the other
    a = Filling([[1, 3, 2]])
    b = Filling([[1, 2]])
    left = convolve(convolve(a, b), b)
    right = convolve(a, convolve(b, b))
    assert left == Filling([[3, 2, 1]])
    assert right == Filling([[1, 3, 2]])
    assert left != right
    assert to_partial_perm(left) == to_partial_perm(right)


def test_fiber_sizes_and_filling_counts():
    # all fillings of shape rho with a fixed support: |rho|! of them, and the
    # map to partial permutations has fibers of size exactly z_rho
    for rho in partitions_up_to(5):
        r = rho.size()
        support = tuple(range(1, r + 1))
        buckets: dict[PartialPermutation, list[Filling]] = {}
        count = 0
        for f in fillings_of_shape(rho, support):
            if f.support != frozenset(support):
                continue
            count += 1
            buckets.setdefault(f.to_partial_perm(), []).append(f)
        assert count == factorial(r)
        z = rho.centralizer_size()
        assert len(buckets) == factorial(r) // z
        for pp, fibers in buckets.items():
            assert len(fibers) == z
            assert sorted(map(str, fibers)) == sorted(
                map(str, fillings_of_perm(rho, pp)))


def test_enumerate_F_examples():
    assert len(enumerate_F(P(2), P(2), P(2, 2))) == 1
    assert len(enumerate_F(P(2), P(2), P(3))) == 4
    for tau in partitions_up_to(3):
        for rho in partitions_up_to(3):
            want = 1 if tau == rho else 0
            assert len(enumerate_F(EMPTY, tau, rho)) == want


def test_enumerate_F_matches_f_small():
    for sigma in partitions_up_to(3):
        for tau in partitions_up_to(3):
            for r in range(max(sigma.size(), tau.size()),
                           sigma.size() + tau.size() + 1):
                for rho in enumerate_partitions(r):
                    assert (len(enumerate_F(sigma, tau, rho))
                            == f_constant(sigma, tau, rho)), (sigma, tau, rho)


def test_enumerate_F_fast_matches_naive():
    for sigma in partitions_up_to(2):
        for tau in partitions_up_to(2):
            for r in range(max(sigma.size(), tau.size()),
                           sigma.size() + tau.size() + 1):
                for rho in enumerate_partitions(r):
                    fast = enumerate_F(sigma, tau, rho)
                    naive = enumerate_F(sigma, tau, rho, method="naive")
                    assert sorted(map(str, (s for s, _ in fast))) == sorted(
                        map(str, (s for s, _ in naive)))
                    assert len(fast) == len(naive)
    spot = [(P(3), P(2), P(4)), (P(2, 1), P(2), P(2, 2, 1)), (P(3), P(3), P(2, 2))]
    for sigma, tau, rho in spot:
        assert (len(enumerate_F(sigma, tau, rho))
                == len(enumerate_F(sigma, tau, rho, method="naive")))


def test_enumerate_F_bound_guard():
    with pytest.raises(ValueError):
        enumerate_F(P(5), P(2), P(5, 2))
    assert len(enumerate_F(P(5), P(2), P(5, 2), max_size=5)) == f_constant(
        P(5), P(2), P(5, 2))


def test_string_roundtrip():
    f = Filling.from_string("3,4,5;2,1")
    assert str(f) == "3,4,5;2,1"
    assert Filling.from_string(str(f)) == f
    assert Filling.from_string("") == Filling(())
    with pytest.raises(ValueError):
        Filling.from_string("1,2;x")
