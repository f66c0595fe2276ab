from math import comb

import pytest

from ncbinom.freepoly import FreePoly
from ncbinom.pbw import PBWPoly, pbw_rewrite
from ncbinom.quotients import (IdealNotMonomial, blumen_binomial,
                               blumen_higher_derivatives_vanish,
                               blumen_normalize, blumen_weyl_compare,
                               kill_project, lie_ideal_closure, qcomm_bell,
                               qcomm_bell_full, qcomm_binomial,
                               qcomm_normalize, weyl_binomial)
from ncbinom.rings import QPoly, q_binomial, q_integer


class TestKillProject:
    def test_drops_terms_with_killed_factor(self):
        p = pbw_rewrite(FreePoly.word((1, 2)))  # E_12 + E_2 E_1
        got = kill_project(p, [(1, 2)])
        assert got == PBWPoly.monomial((((2,), 1), ((1,), 1)))
        assert kill_project(p, []) == p

    def test_kill_everything(self):
        p = pbw_rewrite(FreePoly.word((1, 2)))
        assert kill_project(p, [(1,), (2,), (1, 2)]) == PBWPoly.zero(2)


class TestLieIdealClosure:
    def test_weyl_generators(self):
        # killing [x,[x,y]] and [[x,y],y] kills every Lyndon word of
        # length >= 3
        killed = lie_ideal_closure([(1, 1, 2), (1, 2, 2)], 6)
        from ncbinom.words import lyndon_enumerate
        expect = {w for w in lyndon_enumerate(2, 6) if len(w) >= 3}
        assert killed == expect

    def test_single_long_generator_stays_small(self):
        killed = lie_ideal_closure([(1, 1, 1, 2)], 4)
        assert (1, 1, 1, 2) in killed
        assert all(len(w) == 4 for w in killed)

    def test_non_lyndon_generator_rejected(self):
        with pytest.raises(ValueError):
            lie_ideal_closure([(2, 1)], 4)


class TestWeyl:
    def test_small_cases(self):
        # d=2: y^2 + 2 yx + h + x^2 with h = E_12
        got = weyl_binomial(2)
        assert got.coeff((((2,), 2),)) == 1
        assert got.coeff((((2,), 1), ((1,), 1))) == 2
        assert got.coeff((((1, 2), 1),)) == 1
        assert got.coeff((((1,), 2),)) == 1

    def test_internal_assertions_up_to_8(self):
        # the function cross-checks the closed form against the killed free
        # expansion and the half-h translation internally
        for d in range(9):
            weyl_binomial(d)

    def test_coefficient_mass(self):
        # setting E_2 = E_1 = 1, E_12 = 0 recovers 2^d
        for d in range(7):
            total = sum(c for mono, c in weyl_binomial(d).terms.items()
                        if all(alpha != (1, 2) for alpha, _ in mono))
            assert total == 2 ** d


class TestQComm:
    def test_normalize(self):
        f, w = qcomm_normalize((3, 1, 2))
        assert w == (1, 2, 3)
        assert f == QPoly.q(6)  # swaps cost q^3 twice
        assert qcomm_normalize(()) == (QPoly.one(), ())

    def test_normalize_confluence(self):
        # cost only depends on the multiset inversion structure
        import itertools
        for perm in itertools.permutations((1, 2, 2, 3)):
            f, w = qcomm_normalize(perm)
            assert w == (1, 2, 2, 3)
            inv = sum(a for i, a in enumerate(perm)
                      for b in perm[i + 1:] if a > b)
            assert f == QPoly.q(inv)

    def test_worked_example_3_2(self):
        # B(3,2) over the d-alphabet: (3)_q d_1 d_2
        got = qcomm_bell(3, 2)
        assert got == {(1, 2): q_integer(3)}

    def test_worked_example_4_2(self):
        got = qcomm_bell(4, 2)
        assert set(got) == {(1, 3), (2, 2)}
        assert got[(2, 2)] * q_factorial_sq() == q_binomial(4, 2)

    def test_routes_agree_to_8(self):
        for n in range(9):
            for k in range(n + 1):
                qcomm_bell(n, k)  # asserts internally

    def test_full_bell_at_q_one(self):
        # q=1 coefficients are the multinomial Bell coefficients; total mass
        # over all k is the Bell number
        bell_numbers = [1, 1, 2, 5, 15, 52, 203]
        for n, b in enumerate(bell_numbers):
            total = sum(c(1) for c in qcomm_bell_full(n).values())
            assert total == b

    def test_binomial_cross_check(self):
        for n in range(7):
            qcomm_binomial(n)  # asserts coefficient = q-binom * Bell part


def q_factorial_sq():
    # (2)_{q^2}! = 1 + q^2, the denominator piece for a repeated symbol 2
    return QPoly((1, 0, 1))


class TestBlumen:
    def test_normalize_single_rule(self):
        got = blumen_normalize({("x", "y"): QPoly.one()})
        assert got == {("y", "x"): QPoly.q(1), ("h",): QPoly.one()}

    def test_normalize_h_moves(self):
        assert blumen_normalize({("x", "h"): QPoly.one()}) == {
            ("h", "x"): QPoly.q(2)}
        assert blumen_normalize({("h", "y"): QPoly.one()}) == {
            ("y", "h"): QPoly.q(2)}

    def test_binomial_small(self):
        got = blumen_binomial(2)
        assert got[(2, 0, 0)] == QPoly.one()
        assert got[(1, 0, 1)] == QPoly((1, 1))  # (2)_q
        assert got[(0, 1, 0)] == QPoly.one()
        assert got[(0, 0, 2)] == QPoly.one()

    def test_closed_form_internal_assertions(self):
        for n in range(7):
            blumen_binomial(n)

    def test_collapses_to_weyl_at_q_one(self):
        for n in range(7):
            assert blumen_weyl_compare(n)

    def test_higher_derivatives_vanish(self):
        assert blumen_higher_derivatives_vanish(6)
