"""Shuffle type polynomials in PBW coordinates and the closed coefficient formula.

The closed form gives the coefficient of any PBW monomial in the shuffle type
polynomial of its multidegree as a factorial quotient times a product of
per-Lyndon-word integers; both quantities are asserted integral at every step.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .freepoly import sh_multidegree
from .pbw import (PBWMonomial, PBWPoly, enumerate_pbw_monomials,
                  monomial_multidegree, pbw_rewrite, reduce_mod_p)
from .rings import factorial
from .words import Word, cfl_factorize, is_lyndon


class IntegralityError(ArithmeticError):
    """An exact integer was expected; signals a broken invariant."""


def sh_pbw(counts, m: int = None) -> PBWPoly:
    """PBW form of the shuffle type polynomial with the given letter counts.

    For the binary alphabet pass (i, j) with i the count of letter 2 and j
    the count of letter 1 (the index order used for SH_{i,j}).
    """
    if m is None:
        m = len(counts)
    if m == 2 and len(counts) == 2:
        i, j = counts
        word_form = sh_multidegree((j, i), 2)
    else:
        # counts given per letter 1..m
        word_form = sh_multidegree(tuple(counts), m)
    return pbw_rewrite(word_form)


def _grouped_cfl(w: Word):
    groups = []
    for f in cfl_factorize(w):
        if groups and groups[-1][0] == f:
            groups[-1][1] += 1
        else:
            groups.append([f, 1])
    return groups


@lru_cache(maxsize=None)
def c_e_alpha(alpha: Word) -> int:
    """Coefficient of E_alpha in the shuffle type polynomial of its multidegree.

    Recursion over the CFL factorization of alpha with its leading letter
    removed; a single letter has coefficient 1.  Non-integral intermediates
    violate the closed-form theorem and raise.
    """
    if not is_lyndon(alpha):
        raise ValueError(f"{alpha} is not a Lyndon word")
    if len(alpha) == 1:
        return 1
    value = Fraction(factorial(len(alpha) - 1))
    for sub, a in _grouped_cfl(alpha[1:]):
        value /= Fraction(factorial(len(sub)) ** a * factorial(a))
        value *= c_e_alpha(sub) ** a
    if value.denominator != 1:
        raise IntegralityError(f"non-integral coefficient {value} for {alpha}")
    return int(value)


def coeff_closed_form(mono: PBWMonomial) -> int:
    """Closed-form coefficient of a PBW monomial in its shuffle type polynomial."""
    total = sum(len(alpha) * t for alpha, t in mono)
    value = Fraction(factorial(total))
    for alpha, t in mono:
        value /= Fraction(factorial(len(alpha)) ** t * factorial(t))
        value *= c_e_alpha(alpha) ** t
    if value.denominator != 1:
        raise IntegralityError(f"non-integral coefficient {value} for {mono}")
    return int(value)


def sh_closed_form(counts, m: int = None) -> PBWPoly:
    """Assemble the shuffle type polynomial purely from the closed formula.

    Independent of ``pbw_rewrite``; the equality of the two routes is the
    main verified identity.
    """
    if m is None:
        m = len(counts)
    if m == 2 and len(counts) == 2:
        i, j = counts
        per_letter = (j, i)
    else:
        per_letter = tuple(counts)
    terms = {}
    for mono in enumerate_pbw_monomials(m, per_letter):
        c = coeff_closed_form(mono)
        if c:
            terms[mono] = c
    return PBWPoly(terms, m)


def binomial_ls(m: int, d: int) -> PBWPoly:
    """(E_1 + ... + E_m)^d assembled from the closed coefficient formula."""
    if m < 2:
        raise ValueError("alphabet size must be >= 2")
    if d < 0:
        raise ValueError("negative power")
    terms = {}
    for counts in _compositions(d, m):
        part = sh_closed_form(counts, m)
        for mono, c in part.terms.items():
            terms[mono] = terms.get(mono, 0) + c
    return PBWPoly(terms, m)


def _compositions(d: int, m: int):
    if m == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, m - 1):
            yield (first,) + rest


class CharPViolation(AssertionError):
    pass


def sh_pbw_char_p(k: int, p: int) -> PBWPoly:
    """SH_{k, p-k} over GF(p): only single length-p Lyndon factors survive."""
    if not 1 <= k <= p - 1:
        raise ValueError("need 1 <= k <= p-1")
    reduced = reduce_mod_p(sh_pbw((k, p - k), 2), p)
    for mono in reduced.terms:
        if not (len(mono) == 1 and mono[0][1] == 1 and len(mono[0][0]) == p):
            raise CharPViolation(
                f"monomial {mono} of length < {p} survived reduction mod {p}")
    return reduced


def binomial_multidegrees(m: int, d: int):
    """All letter-count tuples of total d over an alphabet of size m."""
    return list(_compositions(d, m))
