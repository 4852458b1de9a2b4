"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 property
violation reported by ``xcheck``.
"""
import argparse
import re
import sys
from fractions import Fraction

from . import budget as budget_mod
from .arcspace import contact_witness, count_jet_points, jet_equations, lct_via_arcs
from .bernstein import bs_root_report, verify_functional_equation, WeylOperator
from .charp import fpt_estimate, fthreshold, nu_table
from .errors import BudgetExceeded, InputError
from .monomial import (
    MonomialIdeal,
    is_m_primary,
    jumping_numbers,
    lct,
    lct_certificate,
    multiplier_ideal,
    skoda_check,
)
from .multiplicity import (
    check_lct_multiplicity_inequalities,
    colength,
    containment_report,
    hilbert_samuel,
)
from .parse import parse_polynomial, parse_univariate
from .report import InvariantReport, fmt

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4


def infer_n(*texts):
    """Smallest variable count that makes every given text parse."""
    n = 0
    for text in texts:
        if not text:
            continue
        for idx in re.findall(r"(?<![A-Za-z_])d?x(\d+)", text):
            n = max(n, int(idx))
        for letter, k in (("z", 3), ("y", 2), ("x", 1)):
            if re.search(rf"(?<![A-Za-z0-9_])d?[xyz]*{letter}[xyz]*(?![A-Za-z0-9_])", text):
                n = max(n, k)
    return max(n, 1)


def _n(args, *texts):
    return args.n if args.n else infer_n(*texts)


def _rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def _primes(args):
    from .xcheck import primes_between

    if args.primes:
        text = args.primes.strip()
        m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", text)
        if m:
            return primes_between(int(m.group(1)), int(m.group(2)))
        try:
            return [int(x) for x in re.split(r"[,\s]+", text) if x]
        except ValueError:
            raise InputError(f"bad prime list {text!r}") from None
    if args.p:
        return [args.p]
    raise InputError("give --p or --primes")


def _ideal(args, text=None):
    text = text if text is not None else args.ideal
    if not text:
        raise InputError("--ideal is required")
    return MonomialIdeal.parse(text, _n(args, text))


def _poly(args):
    if not args.poly:
        raise InputError("--poly is required")
    return parse_polynomial(args.poly, _n(args, args.poly, getattr(args, "op", None)))


def _range(text):
    m = re.fullmatch(r"\s*(\S+?)\s*\.\.\s*(\S+)\s*", text)
    if not m:
        raise InputError(f"bad range {text!r}; expected lo..hi")
    return _rational(m.group(1)), _rational(m.group(2))


# subcommands ----------------------------------------------------------------


def cmd_lct(args):
    a = _ideal(args)
    c = lct(a)
    w, den = lct_certificate(a)
    return InvariantReport("lct", {"ideal": a.to_str(), "n": a.n}, {"lct": c},
                           [{"weight_vector": list(w), "weight_denominator": den}])


def cmd_mult_ideal(args):
    a = _ideal(args)
    lam = _rational(args.lam)
    J = multiplier_ideal(a, lam)
    return InvariantReport("mult-ideal", {"ideal": a.to_str(), "n": a.n, "lambda": lam},
                           {"multiplier_ideal": J.to_str(),
                            "generators": [list(g) for g in J.gens],
                            "is_unit": J.is_unit})


def cmd_jumps(args):
    a = _ideal(args)
    T = _rational(args.T)
    jumps = jumping_numbers(a, T)
    notes = []
    if T >= 1:
        notes.append("jumping numbers of the ideal; a hypersurface may also jump at integers")
    results = {"jumping_numbers": jumps}
    if args.lam is not None:
        chk = skoda_check(a, _rational(args.lam))
        results["skoda"] = {"equal": chk.equal, "label": chk.label}
    return InvariantReport("jumps", {"ideal": a.to_str(), "n": a.n, "T": T}, results, notes=notes)


def cmd_arcs(args):
    if args.ideal:
        a = _ideal(args)
        M = args.M if args.M is not None else 10
        limit = lct_via_arcs(a, M)
        codim, w = contact_witness(a, limit.m_star + 1)
        return InvariantReport(
            "arcs", {"ideal": a.to_str(), "n": a.n, "M": M},
            {"lct_via_arcs": limit.value, "m_star": limit.m_star,
             "codims": list(limit.codims)},
            [{"order_vector": list(w), "contact_order": limit.m_star + 1, "codim": codim}])
    f = _poly(args)
    m = args.m if args.m is not None else 1
    system = jet_equations(f, m)
    results = {"jet_equations": system.to_strings()}
    notes = []
    if args.p:
        jc = count_jet_points(f, m, args.p, budget=budget_mod.get_budget())
        results["points"] = jc.count
        results["dimension_estimate"] = f"{jc.dimension_estimate:.6f}"
        notes.append("point counts and dimension estimates are heuristic")
    return InvariantReport("arcs", {"poly": f.to_str(), "n": f.nvars, "m": m, "p": args.p},
                           results, notes=notes)


def _estimate_rows(est):
    return {
        "lower": est.lower, "upper": est.upper,
        "conjectured": est.conjectured, "stable_levels": est.stable_levels,
        "nu": list(est.nus[1:]),
    }


def cmd_fpt(args):
    f = _poly(args)
    E = args.depth or 3
    per = {}
    certs = []
    for p in _primes(args):
        est = fpt_estimate(f, p, E)
        per[str(p)] = _estimate_rows(est)
        if est.conjectured is not None:
            certs.append({"p": p, "conjectured": est.conjectured, "status": "conjectural"})
    results = {"estimates": per}
    if len(per) == 1:
        (only,) = per.values()
        results["conjectured"] = only["conjectured"]
    return InvariantReport("fpt", {"poly": f.to_str(), "n": f.nvars, "depth": E}, results, certs,
                           notes=["certified output is the interval [lower, upper]"])


def cmd_nu(args):
    f = _poly(args)
    E = args.depth or 1
    J = _ideal(args, args.J) if args.J else None
    rows = []
    for p in _primes(args):
        table = nu_table(f, p, E, J)
        for p_, e, v, ratio, verified in table.rows():
            rows.append({"p": p_, "e": e, "nu": v, "ratio": ratio, "window_verified": verified})
    return InvariantReport("nu", {"poly": f.to_str(), "n": f.nvars, "depth": E,
                                  "J": J.to_str() if J else "m"}, {"rows": rows})


def cmd_fthreshold(args):
    a = _ideal(args)
    J = MonomialIdeal.parse(args.J, a.n) if args.J else MonomialIdeal.maximal(a.n)
    E = args.depth or 2
    per = {str(p): _estimate_rows(fthreshold(a, J, p, E)) for p in _primes(args)}
    return InvariantReport("fthreshold", {"ideal": a.to_str(), "J": J.to_str(), "n": a.n, "depth": E},
                           {"estimates": per})


def cmd_bs_verify(args):
    if not (args.b and args.op):
        raise InputError("--b and --op are required")
    f = _poly(args)
    b = parse_univariate(args.b)
    P = WeylOperator.parse(args.op, f.nvars)
    chk = verify_functional_equation(b, P, f)
    results = {"verified": chk.verified}
    if not chk.verified:
        results["residual"] = chk.residual.to_str(_xs_names(f.nvars))
    return InvariantReport("bs-verify", {"poly": f.to_str(), "n": f.nvars, "b": b.to_str(),
                                         "op": P.to_str()}, results)


def _xs_names(n):
    from .algebra import default_names

    return default_names(n) + ["s"]


def cmd_bs_roots(args):
    f = _poly(args)
    rng = _range(args.range) if args.range else (Fraction(-2), Fraction(0))
    b = parse_univariate(args.b) if args.b else None
    P = WeylOperator.parse(args.op, f.nvars) if args.op else None
    return bs_root_report(f, _primes(args), args.depth or 2, args.denom_bound or 12, rng, b, P)


def cmd_colength(args):
    a = _ideal(args)
    return InvariantReport("colength", {"ideal": a.to_str(), "n": a.n}, {"colength": colength(a)})


def cmd_mult(args):
    a = _ideal(args)
    sample = hilbert_samuel(a)
    if not sample.stable:
        raise InputError("Hilbert-Samuel fit did not stabilize")
    return InvariantReport("mult", {"ideal": a.to_str(), "n": a.n},
                           {"multiplicity": int(sample.multiplicity)},
                           [{"ks": list(sample.ks), "colengths": list(sample.colengths),
                             "polynomial": list(sample.polynomial), "stable": sample.stable}])


def cmd_ineq(args):
    return check_lct_multiplicity_inequalities(_ideal(args))


def cmd_sympow(args):
    a = _ideal(args)
    return containment_report(a, args.m if args.m else 1)


def cmd_xcheck(args):
    from .xcheck import run_all

    results = run_all(seed=args.seed, quick=args.quick)
    report = InvariantReport(
        "xcheck", {"seed": args.seed, "quick": args.quick},
        {name: {"passed": ok, "detail": detail} for name, ok, detail in results})
    report.failed = any(not ok for _, ok, _ in results)
    return report


COMMANDS = {
    "lct": cmd_lct, "mult-ideal": cmd_mult_ideal, "jumps": cmd_jumps, "arcs": cmd_arcs,
    "fpt": cmd_fpt, "nu": cmd_nu, "fthreshold": cmd_fthreshold, "bs-verify": cmd_bs_verify,
    "bs-roots": cmd_bs_roots, "colength": cmd_colength, "mult": cmd_mult, "ineq": cmd_ineq,
    "sympow": cmd_sympow, "xcheck": cmd_xcheck,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of variables (inferred when omitted)")
    common.add_argument("--ideal", help='monomial ideal, e.g. "x^3, y^5"')
    common.add_argument("--J", help="second monomial ideal (default: the maximal ideal)")
    common.add_argument("--poly", help='polynomial, e.g. "x^2 + y^3"')
    common.add_argument("--lambda", dest="lam", help="rational exponent")
    common.add_argument("--T", default="1", help="upper end of the jumping-number window")
    common.add_argument("--p", type=int, help="a prime")
    common.add_argument("--primes", help="prime range a..b or comma list")
    common.add_argument("--depth", type=int, help="Frobenius depth E")
    common.add_argument("--denom-bound", dest="denom_bound", type=int)
    common.add_argument("--range", help="candidate interval lo..hi (default -2..0)")
    common.add_argument("--b", help="b(s), e.g. \"(s+1)*(s+5/6)\"")
    common.add_argument("--op", help="normal-ordered Weyl operator")
    common.add_argument("--m", type=int, help="jet level or power exponent")
    common.add_argument("--M", type=int, help="largest jet level for lct via arcs")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--quick", action="store_true")
    common.add_argument("--budget", type=int, help="cap on enumeration sizes")
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", dest="output", action="store_const", const="json")
    fmt_group.add_argument("--text", dest="output", action="store_const", const="text")
    parser = argparse.ArgumentParser(prog="pairs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.budget is not None:
        budget_mod.set_budget(args.budget)
    try:
        report = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        budget_mod.set_budget(None)
    out.write((report.to_text() if args.output == "text" else report.to_json()) + "\n")
    if getattr(report, "failed", False):
        return EXIT_VIOLATION
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
