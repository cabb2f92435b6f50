"""Command-line front end: algebra definition files, check pipelines,
reports.

File grammar (line oriented, ``#`` starts a comment)::

    algebra <name>
    basis <name> <even|odd>
    bracket <a> <b> = <rat> <name> { + <rat> <name> }
    pair h = <name> { <name> }

Omitted brackets are zero; the (b, a) bracket is implied by
super-antisymmetry.  Without a ``pair`` line the even part is taken as h
(basis order must then put the odd part first).

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction

from . import coderiv, enveloping, jacobian, liealg, series
from .superpoly import EVEN, ODD, SuperPolynomial, exhaustive_monomials


class ParseError(Exception):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class AlgebraFile:
    """Parsed form of a definition file."""

    def __init__(self, name, basis, brackets, pair_h):
        self.name = name
        self.basis = basis          # list of (name, parity)
        self.brackets = brackets    # {(i, j): {k: Fraction}} with i <= j
        self.pair_h = pair_h        # list of names or None


def _parse_rational(tok, line_no):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"malformed rational {tok!r}") from None


def parse(source: str) -> AlgebraFile:
    name = None
    basis = []
    index = {}
    parities = []
    raw_brackets = []
    pair_h = None
    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "algebra":
            if len(tokens) != 2:
                raise ParseError(line_no, "expected: algebra <name>")
            name = tokens[1]
        elif head == "basis":
            if len(tokens) != 3 or tokens[2] not in ("even", "odd"):
                raise ParseError(line_no, "expected: basis <name> <even|odd>")
            if tokens[1] in index:
                raise ParseError(line_no, f"duplicate basis element {tokens[1]!r}")
            index[tokens[1]] = len(basis)
            basis.append((tokens[1], tokens[2]))
            parities.append(EVEN if tokens[2] == "even" else ODD)
        elif head == "bracket":
            if len(tokens) < 6 or tokens[3] != "=":
                raise ParseError(line_no, "expected: bracket <a> <b> = <rat> <name> { + <rat> <name> }")
            a, b = tokens[1], tokens[2]
            for nm in (a, b):
                if nm not in index:
                    raise ParseError(line_no, f"unknown basis element {nm!r}")
            rest = tokens[4:]
            comps = {}
            while rest:
                if len(rest) < 2:
                    raise ParseError(line_no, "expected <rat> <name> component")
                coeff = _parse_rational(rest[0], line_no)
                target = rest[1]
                if target not in index:
                    raise ParseError(line_no, f"unknown basis element {target!r}")
                comps[index[target]] = comps.get(index[target], Fraction(0)) + coeff
                rest = rest[2:]
                if rest:
                    if rest[0] != "+":
                        raise ParseError(line_no, "components must be joined by '+'")
                    rest = rest[1:]
            i, j = index[a], index[b]
            pij = (parities[i] + parities[j]) % 2
            for k, c in comps.items():
                if c != 0 and parities[k] != pij:
                    raise ParseError(
                        line_no,
                        f"bracket [{a},{b}] has a component on {basis[k][0]} violating parity",
                    )
            raw_brackets.append((line_no, i, j, comps))
        elif head == "pair":
            if len(tokens) < 4 or tokens[1] != "h" or tokens[2] != "=":
                raise ParseError(line_no, "expected: pair h = <name> { <name> }")
            for nm in tokens[3:]:
                if nm not in index:
                    raise ParseError(line_no, f"unknown basis element {nm!r}")
            pair_h = list(tokens[3:])
        else:
            raise ParseError(line_no, f"unknown directive {head!r}")
    if name is None:
        raise ParseError(0, "missing 'algebra <name>' line")
    if not basis:
        raise ParseError(0, "no basis elements declared")
    brackets = {}
    for line_no, i, j, comps in raw_brackets:
        if i > j:
            sign = -1 if (parities[i] * parities[j]) % 2 == 0 else 1
            i, j = j, i
            comps = {k: sign * c for k, c in comps.items()}
        if (i, j) in brackets:
            raise ParseError(line_no, f"duplicate bracket for ({basis[i][0]},{basis[j][0]})")
        comps = {k: c for k, c in comps.items() if c != 0}
        if comps:
            brackets[(i, j)] = comps
    return AlgebraFile(name, basis, brackets, pair_h)


def render(file: AlgebraFile) -> str:
    """Canonical text for an AlgebraFile; parse(render(f)) == f."""
    lines = [f"algebra {file.name}"]
    for nm, par in file.basis:
        lines.append(f"basis {nm} {par}")
    for (i, j) in sorted(file.brackets):
        comps = file.brackets[(i, j)]
        body = " + ".join(f"{comps[k]} {file.basis[k][0]}" for k in sorted(comps))
        lines.append(f"bracket {file.basis[i][0]} {file.basis[j][0]} = {body}")
    if file.pair_h:
        lines.append("pair h = " + " ".join(file.pair_h))
    return "\n".join(lines) + "\n"


def build(file: AlgebraFile):
    """(algebra, pair, used_default_pair); raises ValueError on bad input."""
    names = [nm for nm, _ in file.basis]
    parities = [par for _, par in file.basis]
    alg = liealg.LieSuperAlgebra(names, parities, file.brackets)
    if file.pair_h is not None:
        h = [alg.index(nm) for nm in file.pair_h]
        return alg, liealg.SymmetricPair(alg, h), False
    h = alg.even_indices()
    return alg, liealg.SymmetricPair(alg, h), True


def catalog_file(name: str) -> AlgebraFile:
    """Render a catalog algebra as a definition file."""
    alg, pair = liealg.catalog(name)
    basis = [(nm, "odd" if p == ODD else "even") for nm, p in zip(alg.names, alg.parities)]
    pair_h = [alg.names[i] for i in pair.h_indices] or None
    return AlgebraFile(name, basis, dict(alg.brackets), pair_h)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

class Report:
    """Ordered list of check records."""

    def __init__(self):
        self.records = []  # (check, target, status, witness)
        self.elapsed = {}

    def add(self, check, target, ok, witness=""):
        status = "PASS" if ok else "FAIL"
        self.records.append((check, target, status, str(witness)))

    def value(self, check, target, witness):
        self.records.append((check, target, "PASS", str(witness)))

    def all_pass(self):
        return all(status == "PASS" for _, _, status, _ in self.records)

    def emit(self, path):
        lines = [
            "\t".join((check, target, status, witness.replace("\t", " ").replace("\n", " | ")))
            for check, target, status, witness in self.records
        ]
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")

    def print(self, out=None):
        out = out if out is not None else sys.stdout
        for check, target, status, witness in self.records:
            line = f"{status:4}  {check:32} {target:20} {witness}"
            print(line.rstrip(), file=out)


def _timed(report, check, target, fn):
    start = time.perf_counter()
    ok, witness = fn()
    report.elapsed[(check, target)] = time.perf_counter() - start
    report.add(check, target, ok, witness)
    return ok


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(file: AlgebraFile, args) -> Report:
    report = Report()
    names = [nm for nm, _ in file.basis]
    parities = [par for _, par in file.basis]
    try:
        alg = liealg.LieSuperAlgebra(names, parities, file.brackets, check=False)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok, witness = alg.check_jacobi()
    report.add("check.jacobi", file.name, ok, witness if witness else "")
    if not ok:
        return report
    default_h = file.pair_h is None
    try:
        if default_h:
            pair = liealg.SymmetricPair(alg, alg.even_indices())
        else:
            pair = liealg.SymmetricPair(alg, [alg.index(nm) for nm in file.pair_h])
    except ValueError as exc:
        report.add("check.pair", file.name, False, str(exc))
        return report
    note = " (default h = even part)" if default_h else ""
    report.add("check.pair", file.name, True, f"q=[{','.join(alg.names[i] for i in pair.q_indices)}]"
               f" h=[{','.join(alg.names[i] for i in pair.h_indices)}]{note}")
    ok, witnesses = pair.check_unimodularity()
    report.add(
        "check.unimodularity",
        file.name,
        ok,
        "" if ok else "; ".join(f"str_q(ad {nm}) = {v}" for nm, v in witnesses),
    )
    return report


def cmd_series(args) -> Report:
    report = Report()
    order = args.order if args.order is not None else 12
    perturb = getattr(args, "perturb", False)
    for c in (Fraction(1), Fraction(2), Fraction(1, 3)):
        p = series.p_c(c, order + 1)
        if perturb:
            coeffs = list(p.coefficients)
            coeffs[2] += 1
            p = series.TruncatedSeries1(coeffs, order + 1)
        d = series.TruncatedSeries1([0, -1], order + 1)
        r1, r2, r3 = series.check_symmetric_equations(p, d, order)
        for k, r in enumerate((r1, r2, r3), start=1):
            report.add(f"series.symmetric.eq{k}", f"c={c}", r.is_zero(), "" if r.is_zero() else r)
    h1 = series.TruncatedSeries1.constant(1, order + 1)
    for c in (Fraction(1), Fraction(2)):
        q = series.q_c(c, order + 1)
        if perturb:
            coeffs = list(q.coefficients)
            coeffs[3] += 1
            q = series.TruncatedSeries1(coeffs, order + 1)
        residuals = series.check_coinduced_equations(h1, q, c, order)
        for k, r in enumerate(residuals, start=1):
            report.add(f"series.coinduced.eq{k}", f"c={c}", r.is_zero(), "" if r.is_zero() else r)
    r = series.exp_jacobian_identity_residual(order)
    report.add("series.exp-jacobian-identity", f"order={order}", r.is_zero(), "" if r.is_zero() else r)
    for c in (Fraction(1), Fraction(2)):
        r = series.tanh_coth_identity_residual(c, order)
        report.add("series.tanh-coth-identity", f"c={c}", r.is_zero(), "" if r.is_zero() else r)
    return report


def cmd_gorelik(file: AlgebraFile, args) -> Report:
    report = Report()
    alg, pair, default_h = build(file)
    if not pair.q_purely_odd():
        raise InputError("the Gorelik construction requires a purely odd q part")
    ok, witnesses = pair.check_unimodularity()
    if not ok:
        raise InputError(
            "pair is not unimodular: "
            + "; ".join(f"str_q(ad {nm}) = {v}" for nm, v in witnesses)
        )
    report.add("gorelik.unimodularity", file.name, True, "")
    gp = jacobian.GenericPoint(pair)
    element = jacobian.gorelik_candidate(gp)
    report.value("gorelik.element", file.name, element)
    ok, witness = coderiv.verify_twisted_invariance(pair, element)
    report.add("gorelik.invariance", file.name, ok, "" if ok else witness)
    if args.against_solver:
        basis = coderiv.invariant_space(pair)
        report.add("gorelik.solver-dimension", file.name, len(basis) == 1, f"dim = {len(basis)}")
        if len(basis) == 1:
            w = coderiv.tau(pair, element)
            gen = basis[0]
            ratio = _proportionality(w, gen)
            report.add(
                "gorelik.solver-proportional",
                file.name,
                ratio is not None,
                f"candidate = {ratio} * solver generator" if ratio is not None else "not proportional",
            )
    return report


def _proportionality(w: SuperPolynomial, gen: SuperPolynomial):
    """The exact scalar with w == scalar * gen, or None."""
    if gen.is_zero():
        return None
    mono, lead = next(iter(sorted(gen.terms.items())))
    scalar = w.coefficient(mono) / lead
    return scalar if w == gen * scalar else None


def cmd_jacobian(file: AlgebraFile, args) -> Report:
    report = Report()
    alg, pair, default_h = build(file)
    order = args.order if args.order is not None else 6
    if args.full_group:
        J = jacobian.jacobian_full_group(alg, order)
        report.value("jacobian.full-group", file.name, J)
        return report
    c = Fraction(args.c) if args.c is not None else Fraction(1)
    if c == 0:
        raise InputError("c must be nonzero")
    gp = jacobian.GenericPoint(pair, order)
    result = jacobian.jacobian_Jc(gp, c, order)
    for k, s in result.str_powers:
        report.value("jacobian.str-power", f"k={k}", s)
    report.value("jacobian.J", f"{file.name} c={c}", result.J)
    return report


def cmd_tau(file: AlgebraFile, args) -> Report:
    report = Report()
    alg, pair, default_h = build(file)
    bound = args.order if args.order is not None else 4
    table = coderiv.sq_table(pair)
    ok = True
    witness = ""
    for mono in exhaustive_monomials(table, bound):
        w = SuperPolynomial(table, {mono: Fraction(1)})
        back = coderiv.tau(pair, coderiv.beta_of_sq(pair, w))
        if back != w:
            ok = False
            witness = f"monomial {mono}: tau(beta(w)) = {back}"
            break
    report.add("tau.inverse-of-symmetrization", f"{file.name} degree<={bound}", ok, witness)
    return report


def cmd_selftest(args) -> Report:
    report = Report()
    rng = random.Random(args.seed if args.seed is not None else 0)
    sub = cmd_series(argparse.Namespace(order=12, perturb=False))
    report.records.extend(sub.records)

    for name in ("abelian(1,2)", "osp12", "gl11", "heisenberg_super", "solvable2"):
        alg, pair = liealg.catalog(name)
        ok, witness = alg.check_jacobi()
        report.add("selftest.jacobi", name, ok, witness if witness else "")
        ok, witnesses = pair.check_unimodularity()
        report.add("selftest.unimodularity", name, ok, witnesses if not ok else "")

        # normal-form confluence under randomized schedules
        words = [tuple(rng.randrange(alg.dim) for _ in range(4)) for _ in range(6)]
        conf_ok = True
        for word in words:
            base = enveloping.normal_form(alg, word)
            for _ in range(10):
                alt = enveloping.normal_form(alg, word, choose=lambda n: rng.randrange(n))
                if alt != base:
                    conf_ok = False
        report.add("selftest.confluence", name, conf_ok, "")

        if name == "solvable2":
            continue
        ok, witness = coderiv.check_representation(pair, Fraction(2), 2)
        report.add("selftest.coderivation-representation", name, ok, witness if witness else "")
        table = coderiv.sq_table(pair)
        tau_ok = True
        for mono in exhaustive_monomials(table, 3):
            w = SuperPolynomial(table, {mono: Fraction(1)})
            if coderiv.tau(pair, coderiv.beta_of_sq(pair, w)) != w:
                tau_ok = False
        report.add("selftest.tau-inverse", name, tau_ok, "")

    for name in ("osp12", "gl11", "heisenberg_super", "abelian(1,2)"):
        alg, pair = liealg.catalog(name)
        gp = jacobian.GenericPoint(pair)
        element = jacobian.gorelik_candidate(gp)
        ok, witness = coderiv.verify_twisted_invariance(pair, element)
        report.add("selftest.gorelik-invariance", name, ok, witness if witness else "")
        basis = coderiv.invariant_space(pair)
        report.add("selftest.gorelik-dimension", name, len(basis) == 1, f"dim = {len(basis)}")

    for name in ("osp12", "gl11"):
        alg, pair = liealg.catalog(name)
        gp = jacobian.GenericPoint(pair, 4)
        ok = True
        for c in (Fraction(1), Fraction(2)):
            for a in range(alg.dim):
                if not jacobian.key_identity_check(gp, c, a).is_zero():
                    ok = False
        report.add("selftest.key-identity", name, ok, "")
        p1 = series.p_c(1, 8)
        div_ok = all(
            jacobian.divergence_check(alg, p1, a, order=3).is_zero() for a in range(alg.dim)
        )
        report.add("selftest.divergence-identity", name, div_ok, "")
    return report


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--emit", metavar="PATH", help="write a tab-separated report")
    sub.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    sub.add_argument("--order", type=int, default=None, help="truncation / degree bound")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="supersym",
        description="Exact verification toolkit for Lie superalgebra symmetric pairs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="verify an algebra file: Jacobi, pair, unimodularity")
    p.add_argument("file")
    _add_common(p)

    p = subs.add_parser("gorelik", help="construct and verify the Gorelik element")
    p.add_argument("file")
    p.add_argument("--against-solver", action="store_true", help="also run the invariant-space solver")
    _add_common(p)

    p = subs.add_parser("jacobian", help="Jacobian of the exponential map")
    p.add_argument("file")
    p.add_argument("--c", default=None, help="scaling parameter (rational, nonzero)")
    p.add_argument("--full-group", action="store_true", help="Jacobian of the full supergroup")
    _add_common(p)

    p = subs.add_parser("series", help="verify the functional equations of the universal series")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    _add_common(p)

    p = subs.add_parser("tau", help="check that tau inverts the symmetrization")
    p.add_argument("file")
    _add_common(p)

    p = subs.add_parser("selftest", help="run the built-in verification suite on the catalog")
    _add_common(p)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    needs_file = args.command in ("check", "gorelik", "jacobian", "tau")
    try:
        if needs_file:
            try:
                with open(args.file) as fh:
                    source = fh.read()
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            file = parse(source)
        if args.command == "check":
            report = cmd_check(file, args)
        elif args.command == "gorelik":
            report = cmd_gorelik(file, args)
        elif args.command == "jacobian":
            report = cmd_jacobian(file, args)
        elif args.command == "tau":
            report = cmd_tau(file, args)
        elif args.command == "series":
            report = cmd_series(args)
        else:
            report = cmd_selftest(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.print()
    if args.emit:
        report.emit(args.emit)
    return 0 if report.all_pass() else 1


if __name__ == "__main__":
    sys.exit(main())
