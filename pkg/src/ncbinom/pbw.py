"""Lyndon-Shirshov basis elements and PBW rewriting.

A PBW monomial is a tuple of (lyndon_word, exponent) pairs with the words
strictly decreasing; the empty tuple is the unit.  ``pbw_rewrite`` expresses
any free polynomial with rational coefficients in this basis by eliminating
the lex-minimal word of each homogeneous component; the triangularity that
drives termination is itself a tested property, with an exact linear solve
as fallback.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .freepoly import FreePoly, commutator
from .rings import ModInt, QPoly
from .words import (Word, cfl_factorize, is_lyndon, multidegree,
                    standard_factorization)

PBWMonomial = tuple  # ((word, exp), ...) with strictly decreasing words


class OrderViolation(ValueError):
    pass


class UnsupportedRing(TypeError):
    pass


@lru_cache(maxsize=None)
def ls_basis_element(alpha: Word, m: int = 2) -> FreePoly:
    """E_alpha: the Lyndon word itself for letters, else [E_beta, E_gamma] at st(alpha)."""
    if not is_lyndon(alpha):
        raise ValueError(f"{alpha} is not a Lyndon word")
    if len(alpha) == 1:
        return FreePoly.word(alpha, m)
    beta, gamma = standard_factorization(alpha)
    return commutator(ls_basis_element(beta, m), ls_basis_element(gamma, m))


def monomial_from_word(w: Word) -> PBWMonomial:
    """Group the CFL factorization of w into (lyndon, exponent) pairs."""
    if not w:
        return ()
    factors = cfl_factorize(w)
    grouped = []
    for f in factors:
        if grouped and grouped[-1][0] == f:
            grouped[-1][1] += 1
        else:
            grouped.append([f, 1])
    return tuple((f, e) for f, e in grouped)


def monomial_word(mono: PBWMonomial) -> Word:
    """Concatenation alpha_1^t_1 ... alpha_n^t_n (the lex-minimal word of the expansion)."""
    w = ()
    for alpha, t in mono:
        w += alpha * t
    return w


def monomial_degree(mono: PBWMonomial) -> int:
    return sum(len(alpha) * t for alpha, t in mono)


def monomial_multidegree(mono: PBWMonomial, m: int):
    counts = [0] * m
    for alpha, t in mono:
        for x in alpha:
            counts[x - 1] += t
    return tuple(counts)


def validate_monomial(mono: PBWMonomial):
    prev = None
    for alpha, t in mono:
        if t < 1:
            raise ValueError(f"exponent {t} < 1 in {mono}")
        if not is_lyndon(alpha):
            raise ValueError(f"{alpha} is not Lyndon")
        if prev is not None and not alpha < prev:
            raise OrderViolation(f"factors not strictly decreasing in {mono}")
        prev = alpha
    return mono


@lru_cache(maxsize=None)
def pbw_expand_monomial(mono: PBWMonomial, m: int = 2) -> FreePoly:
    """Product of powers of Lyndon-Shirshov basis elements, in the word basis."""
    result = FreePoly.unit(m)
    for alpha, t in mono:
        e = ls_basis_element(alpha, m)
        for _ in range(t):
            result = result * e
    return result


class PBWPoly:
    """Finitely supported map PBWMonomial -> coefficient."""

    __slots__ = ("terms", "m")

    def __init__(self, terms=None, m: int = 2):
        self.m = m
        t = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    t[mono] = c
        self.terms = t

    @staticmethod
    def zero(m: int = 2) -> "PBWPoly":
        return PBWPoly({}, m)

    @staticmethod
    def monomial(mono: PBWMonomial, m: int = 2, coeff=1) -> "PBWPoly":
        return PBWPoly({validate_monomial(mono): coeff}, m)

    def __add__(self, other: "PBWPoly") -> "PBWPoly":
        if self.m != other.m:
            raise ValueError("alphabet mismatch")
        t = dict(self.terms)
        for mono, c in other.terms.items():
            t[mono] = t[mono] + c if mono in t else c
        return PBWPoly(t, self.m)

    def __sub__(self, other: "PBWPoly") -> "PBWPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "PBWPoly":
        return PBWPoly({mono: c * x for mono, x in self.terms.items()}, self.m)

    def __eq__(self, other):
        if not isinstance(other, PBWPoly):
            return NotImplemented
        if self.m != other.m or self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, mono: PBWMonomial):
        return self.terms.get(mono, 0)

    def map_coeffs(self, fn) -> "PBWPoly":
        return PBWPoly({mono: fn(c) for mono, c in self.terms.items()}, self.m)

    def expand(self) -> FreePoly:
        out = FreePoly.zero(self.m)
        for mono, c in self.terms.items():
            out = out + pbw_expand_monomial(mono, self.m).scale(c)
        return out

    def __repr__(self):
        if not self.terms:
            return "PBWPoly(0)"
        def fmt(mono):
            if not mono:
                return "1"
            return "*".join(
                f"E({''.join(map(str, a))})" + (f"^{t}" if t > 1 else "")
                for a, t in mono)
        parts = [f"{c}*{fmt(mono)}" for mono, c in sorted(self.terms.items())]
        return "PBWPoly(" + " + ".join(parts) + ")"


def pbw_expand(p) -> FreePoly:
    """Linear extension of the monomial expansion."""
    if isinstance(p, PBWPoly):
        return p.expand()
    return pbw_expand_monomial(p)


def _rational_ok(c):
    return isinstance(c, (int, Fraction))


def pbw_rewrite(f: FreePoly) -> PBWPoly:
    """Express f in the PBW basis; exact inverse of expansion.

    Works per homogeneous multidegree component, repeatedly eliminating the
    lex-minimal word via the monomial read off from its CFL factorization.
    Coefficients must be rational (char-p results are reduced afterwards).
    """
    for c in f.terms.values():
        if not _rational_ok(c):
            raise UnsupportedRing(f"pbw_rewrite needs rational coefficients, got {type(c).__name__}")
    m = f.m
    components = {}
    for w, c in f.terms.items():
        components.setdefault(multidegree(w, m), {})[w] = Fraction(c)
    out = {}
    for comp in components.values():
        while comp:
            w = min(comp)
            c = comp.pop(w)
            if c == 0:
                continue
            mono = monomial_from_word(w)
            out[mono] = out.get(mono, 0) + c
            expansion = pbw_expand_monomial(mono, m)
            if expansion.coeff(w) != 1:
                # triangularity failed; should be unreachable, but the PBW
                # property guarantees the linear solve below always works
                comp[w] = c
                out_part = _rewrite_component_by_solve(comp, m)
                for mo, cc in out_part.items():
                    out[mo] = out.get(mo, 0) + cc
                comp = {}
                break
            for u, a in expansion.terms.items():
                if u == w:
                    continue
                comp[u] = comp.get(u, Fraction(0)) - c * a
                if comp[u] == 0:
                    del comp[u]
    return PBWPoly({mono: c for mono, c in out.items() if c}, m)


def enumerate_pbw_monomials(m: int, counts):
    """All PBW monomials with the given multidegree (per-letter counts)."""
    from .words import lyndon_enumerate
    total = sum(counts)
    lyndons = [w for w in lyndon_enumerate(m, max(total, 1)) if len(w) <= total]
    lyndons.sort(reverse=True)  # choose factors in decreasing order
    results = []

    def rec(idx, remaining, acc):
        if all(r == 0 for r in remaining):
            results.append(tuple(acc))
            return
        if idx >= len(lyndons):
            return
        alpha = lyndons[idx]
        deg = multidegree(alpha, m)
        max_t = min((remaining[i] // deg[i]) for i in range(m) if deg[i]) if any(deg) else 0
        rec(idx + 1, remaining, acc)
        for t in range(1, max_t + 1):
            new_rem = tuple(remaining[i] - t * deg[i] for i in range(m))
            if any(r < 0 for r in new_rem):
                break
            rec(idx + 1, new_rem, acc + [(alpha, t)])

    rec(0, tuple(counts), [])
    return results


def _rewrite_component_by_solve(comp, m):
    """Exact linear solve of one homogeneous component in the PBW basis.

    Fallback path: the PBW property guarantees a unique solution even if the
    triangular elimination were ever to fail.
    """
    some_word = next(iter(comp))
    counts = multidegree(some_word, m)
    monos = enumerate_pbw_monomials(m, counts)
    words = sorted({w for mono in monos for w in pbw_expand_monomial(mono, m).terms}
                   | set(comp))
    widx = {w: i for i, w in enumerate(words)}
    # columns: monomials; rows: words
    cols = []
    for mono in monos:
        exp = pbw_expand_monomial(mono, m)
        col = [Fraction(0)] * len(words)
        for w, c in exp.terms.items():
            col[widx[w]] = Fraction(c)
        cols.append(col)
    rhs = [Fraction(0)] * len(words)
    for w, c in comp.items():
        rhs[widx[w]] = Fraction(c)
    sol = _solve_exact(cols, rhs)
    return {mono: c for mono, c in zip(monos, sol) if c}


def _solve_exact(cols, rhs):
    """Solve A x = rhs where A is given by columns, over the rationals."""
    ncols = len(cols)
    nrows = len(rhs)
    aug = [[cols[j][i] for j in range(ncols)] + [rhs[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            raise ArithmeticError("inconsistent system; PBW basis violated")
    sol = [Fraction(0)] * ncols
    for row, c in enumerate(pivots):
        sol[c] = aug[row][ncols]
    return sol


def reduce_mod_p(p_poly: PBWPoly, p: int) -> PBWPoly:
    """Reduce rational PBW coefficients mod p (denominators must be units)."""
    def red(c):
        c = Fraction(c)
        inv = pow(c.denominator % p, -1, p)
        return ModInt(c.numerator * inv, p)
    return p_poly.map_coeffs(red)


def commutator_ls(alpha: Word, beta: Word, m: int = 2) -> PBWPoly:
    """[E_alpha, E_beta] rewritten in the PBW basis, for Lyndon alpha < beta.

    The structural facts about the result (single E_gamma factors with
    alpha*beta <= gamma < beta and matching multidegree; or exactly
    E_{alpha beta} when alpha is a letter or its right factor dominates beta)
    are asserted as postconditions.
    """
    if not (is_lyndon(alpha) and is_lyndon(beta)):
        raise ValueError("both arguments must be Lyndon words")
    if not alpha < beta:
        raise OrderViolation(f"{alpha} must precede {beta}")
    result = pbw_rewrite(commutator(ls_basis_element(alpha, m), ls_basis_element(beta, m)))
    ab = alpha + beta
    simple_case = len(alpha) == 1 or standard_factorization(alpha)[1] >= beta
    if simple_case:
        assert result == PBWPoly.monomial(((ab, 1),), m), \
            f"[E_{alpha}, E_{beta}] expected E_{ab}, got {result!r}"
    else:
        want_counts = multidegree(ab, m)
        assert result.coeff(((ab, 1),)), "coefficient of E_{alpha beta} vanished"
        for mono in result.terms:
            assert len(mono) == 1 and mono[0][1] == 1, f"non-Lie monomial {mono}"
            gamma = mono[0][0]
            assert ab <= gamma < beta, f"gamma {gamma} out of range"
            assert multidegree(gamma, m) == want_counts, "multidegree mismatch"
    return result
