"""Command line interface.

Exit codes: 0 on success, 1 on input errors, 2 when the residue ring has no
free representation for the requested order.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coeff import DomainError
from .dimension import (
    OrderError, UnitIdealError, dimension_report, krull_dimension_lex,
)
from .groebner import NotFreeError, is_free_representation, require_free, strong_groebner
from .hilbert import (
    MonomialIdeal, hilbert_polynomial, hilbert_series, krull_dimension_degcompat,
    series_coefficients,
)
from .parser import (
    ParseError, ProblemError, ProblemSpec, make_ring, parse_inline_ideal,
    parse_polynomial, parse_problem,
)
from .polyring import reduce

EXIT_OK, EXIT_INPUT, EXIT_NOT_FREE = 0, 1, 2
COMMANDS = ("gb", "check-free", "cdim", "hilbert", "kdim", "reduce")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="freedim",
        description="Groebner bases, freeness, Hilbert series and dimension of "
                    "A[x1..xn]/I for A = ZZ, QQ, Fp.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", help="problem file ('-' for stdin)")
    ap.add_argument("--ring", help="ZZ, QQ or Fp:<p>")
    ap.add_argument("--vars", help="comma separated variables, greatest first")
    ap.add_argument("--order", help="lex, deglex or degrevlex")
    ap.add_argument("--ideal", help="generators separated by ';'")
    ap.add_argument("--poly", help="polynomial to reduce (reduce command)")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--terms", type=int, default=8,
                    help="number of Hilbert series coefficients to print")
    ap.add_argument("--scan-order", choices=("ascending", "descending"), default="ascending",
                    help="variable scan order for the left basic set")
    return ap


def load_problem(args) -> ProblemSpec:
    if args.problem:
        text = sys.stdin.read() if args.problem == "-" else Path(args.problem).read_text("utf-8")
        spec = parse_problem(text)
        if not any((args.ring, args.vars, args.order, args.ideal)):
            return spec
        ring = make_ring(args.ring or str(spec.domain),
                         args.vars or ",".join(spec.variables),
                         args.order or str(spec.order))
        if args.ideal:
            gens = parse_inline_ideal(args.ideal, ring)
        else:
            gens = [ring.from_dict(g.terms) for g in spec.generators]
        return ProblemSpec(ring, gens)
    missing = [f"--{k}" for k in ("ring", "vars", "order", "ideal") if not getattr(args, k)]
    if missing:
        raise ProblemError(f"no problem file given and missing {', '.join(missing)}")
    ring = make_ring(args.ring, args.vars, args.order)
    return ProblemSpec(ring, parse_inline_ideal(args.ideal, ring))


def _var_names(ring, subset):
    return [ring.variables[i] for i in subset]


def run(command: str, spec: ProblemSpec, terms: int = 8, scan: str = "ascending",
        poly: str | None = None) -> dict:
    """Execute ``command`` and return the report; raises on failure."""
    ring = spec.ring
    report = {
        "command": command,
        "ring": str(ring.domain),
        "vars": list(ring.variables),
        "order": str(ring.order),
        "ideal": [g.render() for g in spec.generators],
    }
    warnings: list = []
    G = strong_groebner(spec.generators)

    if command == "gb":
        report.update(basis=G.render(), reduced=G.reduced, monic=G.monic)
    elif command == "check-free":
        fr = is_free_representation(G)
        witness = None
        if fr.witness is not None:
            w = fr.witness
            witness = {"monomial": ring.mono_str(w.monomial),
                       "generators": [str(c) for c in w.generators],
                       "gcd": str(w.gcd)}
        report.update(is_free=fr.is_free, basis=G.render(), witness=witness)
    elif command == "cdim":
        dr = dimension_report(G, scan=scan)
        kdim = (krull_dimension_lex(G) if ring.order.kind == "lex"
                else krull_dimension_degcompat(G))
        report.update(cdim=dr.cdim,
                      maximal_sets=[_var_names(ring, S) for S in dr.maximal_sets],
                      lbs=_var_names(ring, dr.left_basic_set),
                      kdim=kdim)
        warnings.extend(dr.warnings)
    elif command == "hilbert":
        if not ring.order.degree_compatible:
            raise OrderError("Hilbert series need a degree-compatible order (deglex or degrevlex)")
        require_free(G)
        if G.is_unit_ideal:
            raise UnitIdealError("the ideal is the unit ideal; the residue ring is zero")
        H = hilbert_series(MonomialIdeal.leading_ideal(G), order_key=ring.order.key)
        p = hilbert_polynomial(H)
        report.update(numerator=list(H.numerator), n=H.n,
                      coefficients=series_coefficients(H, max(terms, 1) - 1),
                      series=H.display(), polynomial=p.render(), degree=p.degree)
    elif command == "kdim":
        if ring.order.kind == "lex":
            dr = dimension_report(G, scan=scan)
            report.update(route="combinatorial", cdim=dr.cdim,
                          maximal_sets=[_var_names(ring, S) for S in dr.maximal_sets],
                          lbs=_var_names(ring, dr.left_basic_set),
                          kdim=krull_dimension_lex(G))
            warnings.extend(dr.warnings)
        else:
            kdim = krull_dimension_degcompat(G)
            report.update(route="hilbert", degree=kdim - ring.domain.krull_dim, kdim=kdim)
    elif command == "reduce":
        if not poly:
            raise ProblemError("reduce needs --poly")
        f = parse_polynomial(poly, ring)
        report.update(poly=f.render(), basis=G.render(), remainder=reduce(f, G.elements).render())
    else:
        raise ProblemError(f"unknown command {command!r}")
    report["warnings"] = warnings
    return report


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "warnings":
            continue
        if isinstance(value, list):
            if value and isinstance(value[0], list):
                value = ", ".join("{" + ", ".join(v) + "}" for v in value)
            else:
                value = "[" + ", ".join(str(v) for v in value) + "]"
        elif isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_problem(args)
        report = run(args.command, spec, terms=args.terms, scan=args.scan_order, poly=args.poly)
    except NotFreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FREE
    except (ParseError, ProblemError, DomainError, OrderError, UnitIdealError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = render_json(report) if args.format == "json" else render_text(report)
    print(out)
    for w in report["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
