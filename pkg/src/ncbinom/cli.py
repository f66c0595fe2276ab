"""Command-line surface: enumeration, factorization, expansions, quotients,
and the identity verification driver.

Exit codes: 0 success, 1 identity failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import qsigma, quotients, verify
from .bell import bell_dual, bell_partial
from .emit import emit, emit_json, parse_json
from .freepoly import FreePoly
from .pbw import pbw_rewrite, reduce_mod_p
from .shuffle import binomial_ls, sh_closed_form, sh_pbw_char_p
from .words import (cfl_factorize, format_word, is_lyndon, lyndon_enumerate,
                    parse_word, standard_factorization)

DEFAULT_DEGREE_CAP = 10


class UsageError(Exception):
    pass


# -- expression parser -------------------------------------------------------
# Grammar (matches the text emitter): expr := term (('+'|'-') term)*
# term := factor ('*' factor)* ; factor := atom ['^' int]
# atom := number | E(word) | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(E\((?:e|\d*)\))|(\d+/\d+|\d+)|([()+\-*^]))")


def _tokenize(s: str):
    out, pos = [], 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot tokenize expression at: {s[pos:]!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, m):
        self.toks = tokens
        self.i = 0
        self.m = m

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> FreePoly:
        p = self.expr()
        if self.peek() is not None:
            raise UsageError(f"trailing tokens from {self.peek()!r}")
        return p

    def expr(self):
        p = self.signed_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.signed_term()
            p = p + q.scale(-1 if op == "-" else 1)
        return p

    def signed_term(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        return self.term().scale(sign)

    def term(self):
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        atom = self.atom()
        if self.peek() == "^":
            self.take()
            n = self.take()
            if n is None or not n.isdigit():
                raise UsageError("power must be a nonnegative integer")
            atom = atom ** int(n)
        return atom

    def atom(self):
        t = self.take()
        if t is None:
            raise UsageError("unexpected end of expression")
        if t.startswith("E("):
            w = parse_word(t[2:-1], self.m)
            return FreePoly.word(w, self.m)
        if t == "(":
            p = self.expr()
            if self.take() != ")":
                raise UsageError("missing closing parenthesis")
            return p
        if "/" in t:
            return FreePoly.unit(self.m, Fraction(t))
        if t.isdigit():
            return FreePoly.unit(self.m, int(t))
        raise UsageError(f"unexpected token {t!r}")


def parse_expression(s: str, m: int = 2) -> FreePoly:
    return _Parser(_tokenize(s), m).parse()


# -- command implementations -------------------------------------------------

def _degree_guard(degree: int, cap: int):
    if degree > cap:
        raise UsageError(
            f"total degree {degree} exceeds the cap {cap}; raise --max-degree")


def _print_poly(p, fmt):
    print(emit(p, fmt))


def cmd_lyndon(args):
    words = lyndon_enumerate(args.alphabet, args.max_len)
    print(" ".join(format_word(w, args.alphabet) for w in words))
    return 0


def cmd_factorize(args):
    w = parse_word(args.word, args.alphabet)
    if not w:
        raise UsageError("cannot factorize the empty word")
    factors = cfl_factorize(w)
    print("cfl:", " ".join(format_word(f, args.alphabet) for f in factors))
    if is_lyndon(w) and len(w) >= 2:
        beta, gamma = standard_factorization(w)
        print("standard:", format_word(beta, args.alphabet),
              format_word(gamma, args.alphabet))
    return 0


def _parse_counts(s: str):
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"bad degree spec {s!r}; expected i,j[,k...]")


def cmd_sh(args):
    counts = _parse_counts(args.degree)
    if len(counts) < 2:
        raise UsageError("need at least two counts")
    _degree_guard(sum(counts), args.max_degree)
    m = len(counts)
    if args.ring.startswith("GF:"):
        p = int(args.ring[3:])
        if m != 2 or sum(counts) != p:
            raise UsageError("GF:p shuffle display expects two counts summing to p")
        _print_poly(sh_pbw_char_p(counts[0], p), args.format)
        return 0
    poly = sh_closed_form(counts, m)
    if args.pbw:
        _print_poly(poly, args.format)
    else:
        from .freepoly import sh_multidegree
        if m == 2:
            word_form = sh_multidegree((counts[1], counts[0]), 2)
        else:
            word_form = sh_multidegree(counts, m)
        _print_poly(word_form, args.format)
    return 0


def cmd_binom(args):
    _degree_guard(args.degree, args.max_degree)
    poly = binomial_ls(args.alphabet, args.degree)
    if args.ring.startswith("GF:"):
        poly = reduce_mod_p(poly, int(args.ring[3:]))
    _print_poly(poly, args.format)
    return 0


def cmd_pbw(args):
    f = parse_expression(args.expr, args.alphabet)
    _degree_guard(max((len(w) for w in f.terms), default=0), args.max_degree)
    poly = pbw_rewrite(f)
    if args.ring.startswith("GF:"):
        poly = reduce_mod_p(poly, int(args.ring[3:]))
    _print_poly(poly, args.format)
    return 0


def cmd_bell(args):
    _degree_guard(args.n, args.max_degree)
    ks = [args.k] if args.k is not None else list(range(args.n + 1))
    for k in ks:
        fn = bell_dual if args.dual else bell_partial
        poly = fn(args.n, k)
        label = f"B*({args.n},{k})" if args.dual else f"B({args.n},{k})"
        print(f"{label}: ", end="")
        _print_poly(poly, args.format)
    return 0


def cmd_qbell(args):
    _degree_guard(args.n, args.max_degree)
    if args.k is not None:
        _print_poly(qsigma.qbell_partial(args.n, args.k), args.format)
    else:
        _print_poly(qsigma.qbell(args.n), args.format)
    return 0


def _fmt_qpoly(c):
    return str(c)


def cmd_quotient(args):
    if args.model == "weyl":
        if args.d is None:
            raise UsageError("quotient weyl needs --d")
        _degree_guard(args.d, args.max_degree)
        _print_poly(quotients.weyl_binomial(args.d), args.format)
        return 0
    if args.model == "blumen":
        if args.n is None:
            raise UsageError("quotient blumen needs --n")
        _degree_guard(args.n, args.max_degree)
        for (r, s, t), c in sorted(quotients.blumen_binomial(args.n).items()):
            print(f"y^{r} h^{s} x^{t}: {_fmt_qpoly(c)}")
        return 0
    if args.model == "qcomm-bell":
        if args.n is None or args.k is None:
            raise UsageError("quotient qcomm-bell needs --n and --k")
        _degree_guard(args.n, args.max_degree)
        for word, c in sorted(quotients.qcomm_bell(args.n, args.k).items()):
            mono = " ".join(f"d{i}" for i in word) or "1"
            print(f"{mono}: {_fmt_qpoly(c)}")
        return 0
    if args.model == "kill":
        if not args.set or args.expr is None:
            raise UsageError("quotient kill needs --set and --expr")
        kill = {parse_word(w, args.alphabet) for w in args.set.split(",")}
        for w in kill:
            if not is_lyndon(w):
                raise UsageError(f"{format_word(w, args.alphabet)} is not a Lyndon word")
        f = parse_expression(args.expr, args.alphabet)
        _degree_guard(max((len(w) for w in f.terms), default=0), args.max_degree)
        _print_poly(quotients.kill_project(pbw_rewrite(f), kill), args.format)
        return 0
    raise UsageError(f"unknown quotient model {args.model!r}")


def _operator_from_spec(path: str, kind: str, sigma=None):
    with open(path) as fh:
        spec = json.load(fh)
    m = spec.get("alphabet", 2)
    images = {int(x): parse_json(doc) for x, doc in spec["images"].items()}
    if kind == "endomorphism":
        return qsigma.Endomorphism(images, m)
    return qsigma.GenDerivation(images, sigma, m)


def cmd_ore(args):
    _degree_guard(args.n, args.max_degree)
    if args.sigma_spec:
        sigma = _operator_from_spec(args.sigma_spec, "endomorphism")
    elif args.sigma == "grading":
        sigma = qsigma.GradingSigma(2)
    else:
        sigma = qsigma.IdentityOp()
    if args.delta_spec:
        delta = _operator_from_spec(args.delta_spec, "derivation", sigma)
    else:
        delta = qsigma.AdSigma(FreePoly.letter(1, 2), sigma)
    coeffs = qsigma.ore_binomial(args.n, sigma, delta)
    for k, c in enumerate(coeffs):
        print(f"coeff of x^{args.n - k}: ", end="")
        _print_poly(c, args.format)
    return 0


def cmd_verify(args):
    if args.suite == "all":
        names = sorted(verify.SUITES)
    else:
        if args.suite not in verify.SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; "
                             f"choose from {', '.join(sorted(verify.SUITES))} or all")
        names = [args.suite]
    failed = False
    for name in names:
        ok, detail = verify.run_suite(name, args.max_degree)
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
        if not ok:
            failed = True
    return 1 if failed else 0


# -- argument wiring ---------------------------------------------------------

def _add_common(sp):
    sp.add_argument("--ring", default="Q", help="Q, GF:p or Q[q]")
    sp.add_argument("--format", default="text", choices=["text", "latex", "json"])
    sp.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ncbinom",
        description="Exact noncommutative binomial expansions in the "
                    "Lyndon-Shirshov PBW basis")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lyndon", help="enumerate Lyndon words")
    sp.add_argument("--alphabet", type=int, default=2)
    sp.add_argument("--max-len", type=int, required=True)
    sp.set_defaults(fn=cmd_lyndon)

    sp = sub.add_parser("factorize", help="Chen-Fox-Lyndon and standard factorization")
    sp.add_argument("--word", required=True)
    sp.add_argument("--alphabet", type=int, default=2)
    sp.set_defaults(fn=cmd_factorize)

    sp = sub.add_parser("sh", help="shuffle type polynomial")
    sp.add_argument("--degree", required=True, help="letter counts i,j[,k...]")
    sp.add_argument("--pbw", action="store_true", help="emit in the PBW basis")
    _add_common(sp)
    sp.set_defaults(fn=cmd_sh)

    sp = sub.add_parser("binom", help="full multinomial expansion in the PBW basis")
    sp.add_argument("--alphabet", type=int, default=2)
    sp.add_argument("--degree", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_binom)

    sp = sub.add_parser("pbw", help="rewrite a word-basis expression into the PBW basis")
    sp.add_argument("--expr", required=True,
                    help="e.g. \"2*E(21)+E(12)\" or \"(E(1)+E(2))^3\"")
    sp.add_argument("--alphabet", type=int, default=2)
    _add_common(sp)
    sp.set_defaults(fn=cmd_pbw)

    sp = sub.add_parser("bell", help="partial Bell differential polynomials (PBW basis)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--dual", action="store_true")
    _add_common(sp)
    sp.set_defaults(fn=cmd_bell)

    sp = sub.add_parser("qbell", help="q-Bell differential polynomials over Q[q]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    _add_common(sp)
    sp.set_defaults(fn=cmd_qbell)

    sp = sub.add_parser("quotient", help="structured quotient expansions")
    sp.add_argument("model", choices=["weyl", "blumen", "qcomm-bell", "kill"])
    sp.add_argument("--d", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--set", help="comma-separated Lyndon generators to kill")
    sp.add_argument("--expr")
    sp.add_argument("--alphabet", type=int, default=2)
    _add_common(sp)
    sp.set_defaults(fn=cmd_quotient)

    sp = sub.add_parser("ore", help="binomial coefficients for xy = sigma(y)x + delta(y)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--sigma", choices=["id", "grading"], default="id")
    sp.add_argument("--sigma-spec", help="JSON file with generator images")
    sp.add_argument("--delta-spec", help="JSON file with generator images")
    _add_common(sp)
    sp.set_defaults(fn=cmd_ore)

    sp = sub.add_parser("verify", help="run identity verification suites")
    sp.add_argument("suite", nargs="?", default="all")
    sp.add_argument("--max-degree", type=int, default=6)
    sp.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
