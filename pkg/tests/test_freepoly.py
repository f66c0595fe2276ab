from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from ncbinom.freepoly import (FreePoly, commutator, sh_multidegree,
                              sh_word_basis, shuffle_product)

words = st.lists(st.integers(1, 2), min_size=0, max_size=6).map(tuple)


def rand_poly(draw_words, coeffs):
    terms = {w: c for w, c in zip(draw_words, coeffs) if c}
    return FreePoly(terms, 2)


polys = st.builds(
    rand_poly,
    st.lists(words, min_size=0, max_size=4, unique=True),
    st.lists(st.integers(-5, 5), min_size=4, max_size=4),
)


class TestArithmetic:
    def test_ring_axioms_on_samples(self):
        x = FreePoly.letter(1)
        y = FreePoly.letter(2)
        assert (x + y) * (x - y) == x * x - x * y + y * x - y * y
        assert (x * y) * x == x * (y * x)
        assert x + FreePoly.zero() == x
        assert x * FreePoly.unit() == x

    def test_scalar_action(self):
        x = FreePoly.letter(1)
        assert 2 * x == x + x
        assert Fraction(1, 2) * (x + x) == x
        assert x.scale(0) == FreePoly.zero()

    def test_power(self):
        y = FreePoly.letter(2)
        assert y ** 3 == y * y * y
        assert y ** 0 == FreePoly.unit()

    def test_coeff_lookup(self):
        p = FreePoly.word((1, 2), coeff=3) + FreePoly.word((2,), coeff=-1)
        assert p.coeff((1, 2)) == 3
        assert p.coeff((1, 1)) == 0

    @given(polys, polys, polys)
    def test_distributivity(self, f, g, h):
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h

    @given(polys, polys)
    def test_noncommutative_in_general(self, f, g):
        # sanity: product degree additivity on homogeneous slices
        fg = f * g
        for w, c in fg.terms.items():
            assert c != 0


class TestCommutator:
    def test_basic(self):
        x = FreePoly.letter(1)
        y = FreePoly.letter(2)
        assert commutator(x, y) == x * y - y * x
        assert commutator(x, x) == FreePoly.zero()

    @given(polys, polys)
    def test_antisymmetry(self, f, g):
        assert commutator(f, g) == -commutator(g, f)

    @given(polys, polys, polys)
    def test_jacobi(self, f, g, h):
        total = (commutator(f, commutator(g, h))
                 + commutator(g, commutator(h, f))
                 + commutator(h, commutator(f, g)))
        assert total == FreePoly.zero()


class TestShuffle:
    def test_small_example(self):
        u = FreePoly.word((1,))
        v = FreePoly.word((2,))
        assert shuffle_product(u, v) == FreePoly.word((1, 2)) + FreePoly.word((2, 1))

    def test_square_shuffle(self):
        u = FreePoly.word((1, 2))
        got = shuffle_product(u, u)
        assert got.coeff((1, 1, 2, 2)) == 4
        assert got.coeff((1, 2, 1, 2)) == 2

    def test_mass(self):
        # total coefficient mass of u sha v is binom(|u|+|v|, |u|)
        u = FreePoly.word((1, 1, 2))
        v = FreePoly.word((2, 1))
        got = shuffle_product(u, v)
        assert sum(got.terms.values()) == comb(5, 3)

    @given(polys, polys)
    def test_commutativity(self, f, g):
        assert shuffle_product(f, g) == shuffle_product(g, f)


class TestShuffleTypePolynomials:
    def test_binary_small_values(self):
        # SH with one letter-2 and one letter-1: the two mixed words
        p = sh_multidegree((1, 1))
        assert p == FreePoly.word((1, 2)) + FreePoly.word((2, 1))
        # pure powers
        assert sh_multidegree((3, 0)) == FreePoly.word((1, 1, 1))
        assert sh_multidegree((0, 2)) == FreePoly.word((2, 2))

    def test_all_coefficients_are_one(self):
        for i in range(5):
            for j in range(5):
                p = sh_multidegree((i, j))
                assert all(c == 1 for c in p.terms.values())
                assert len(p.terms) == comb(i + j, i)

    def test_word_route_matches_recursion(self):
        for i in range(5):
            for j in range(5):
                assert sh_word_basis(i, j) == sh_multidegree((j, i))

    def test_binomial_resolution(self):
        # (x + y)^n splits into the shuffle type slices
        x = FreePoly.letter(1)
        y = FreePoly.letter(2)
        for n in range(9):
            total = FreePoly.zero()
            for k in range(n + 1):
                total = total + sh_word_basis(k, n - k)
            assert total == (x + y) ** n

    def test_commutation_recurrence(self):
        # [x, SH_{i,j-1}] == [SH_{i-1,j}, y]
        x = FreePoly.letter(1)
        y = FreePoly.letter(2)
        for i in range(1, 6):
            for j in range(1, 6):
                lhs = commutator(x, sh_word_basis(i, j - 1))
                rhs = commutator(sh_word_basis(i - 1, j), y)
                assert lhs == rhs

    def test_splitting_identity(self):
        # SH_{i,j} = sum_t SH_{k-t, t} * SH_{i-k+t, j-t}
        for i in range(4):
            for j in range(4):
                for k in range(i + j + 1):
                    total = FreePoly.zero()
                    for t in range(min(k, j) + 1):
                        if k - t > i:
                            continue
                        total = total + sh_word_basis(k - t, t) * sh_word_basis(i - k + t, j - t)
                    assert total == sh_word_basis(i, j)

    def test_ternary_multidegree(self):
        p = sh_multidegree((1, 1, 1), 3)
        assert len(p.terms) == 6
        assert all(sorted(w) == [1, 2, 3] for w in p.terms)


class TestErrors:
    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            FreePoly.letter(1, m=2) + FreePoly.letter(1, m=3)

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError):
            FreePoly.letter(3, m=2)
