"""Command line interface.

Exit codes: 0 success, 1 usage or argument error, 2 the point is not on the
variety (or has the wrong length), 3 the system file or point does not
parse, 4 the g-corner stopping rule was not met (the partial result is still
printed).
"""

import argparse
import logging
import sys

from . import __version__
from .dual import (
    Strategy,
    dual_dimension_profile,
    truncated_dual,
    zero_dimensional_dual,
)
from .errors import DimensionError, ParseError, PointNotOnVarietyError
from .hilbert import (
    GCORNER_MAX_DEGREE,
    dimension_and_multiplicity,
    g_corners,
    hilbert_function_of_dual,
    hilbert_series_data,
    s_corners,
)
from .numlinalg import DEFAULT_TOL
from .poly import MonomialOrder
from .sysfile import canonical_phase, dump_json, dump_text, parse_point, parse_system_with_names

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_UNVERIFIED = 4

TOLERANCE_POLICY = (
    "relative singular value cutoff: s > tol * max(s_max, 1) after scaling each "
    "centred generator to unit max coefficient"
)

COMMANDS = ("dual", "zdual", "hf", "gcorners", "scorners", "hilbpoly", "regularity", "dimmult")
NEEDS_DEGREE = ("dual", "hf")

log = logging.getLogger("localdual")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="localdual", description="Local dual spaces and Hilbert data of polynomial systems.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--system", required=True, help="system file")
        p.add_argument("--point", required=True, help='comma separated coordinates, e.g. "1, 2+0.5i"')
        p.add_argument("--degree", type=int, required=name in NEEDS_DEGREE)
        p.add_argument("--strategy", choices=["dz", "bm"], default="bm")
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
        p.add_argument("--order", choices=["grevlex", "grlex"], default="grevlex")
        p.add_argument("--output", choices=["json", "text"], default="json")
        p.add_argument("--max-degree", type=int, default=None, help="degree cap for searches")
    return parser


def _exponents(exps):
    return [list(e) for e in exps]


def _basis_doc(D):
    V = canonical_phase(D.basis)
    return {
        "monomials": _exponents(D.monomials),
        "basis": [[complex(c) for c in col] for col in V.T],
    }


def _gcorner_doc(G):
    return {
        "g_corners": _exponents(G.gens),
        "dual_profile": list(G.dual_profile),
    }


def _hp_doc(data):
    return {
        "hilbert_polynomial": data.hp_string(),
        "hilbert_polynomial_coefficients": [str(c) for c in data.hp],
        "hf_values": list(data.hf_values),
        "regularity": data.regularity,
    }


def run(args):
    """Execute a parsed command; returns ``(document, exit code)``."""
    with open(args.system, encoding="utf-8") as fh:
        text = fh.read()
    F, names = parse_system_with_names(text)
    y = parse_point(args.point)
    if len(y) != F.nvars:
        raise DimensionError(f"point has {len(y)} coordinates, system has {F.nvars} variables")
    strategy = Strategy(args.strategy)
    order = MonomialOrder(args.order)
    tol = args.tolerance
    if not 0 <= tol < 1:
        raise ValueError(f"tolerance must lie in [0, 1), got {tol}")

    doc = {
        "command": args.command,
        "inputs": {
            "system": args.system,
            "variables": names,
            "generators": [f.to_string(names) for f in F],
            "point": list(y),
        },
        "tolerance": tol,
        "tolerance_policy": TOLERANCE_POLICY,
        "strategy": strategy.value,
        "order": order.value,
        "outputs": {},
        "verification": {},
    }
    out = doc["outputs"]
    code = EXIT_OK
    cmd = args.command

    if cmd in NEEDS_DEGREE:
        if args.degree < 0:
            raise ValueError("--degree must be non-negative")
        doc["inputs"]["degree"] = args.degree

    if cmd == "dual":
        D = truncated_dual(F, y, args.degree, strategy, tol, order)
        out.update(degree_bound=D.degree_bound, dim=D.dim, **_basis_doc(D))
    elif cmd == "zdual":
        kwargs = {} if args.max_degree is None else {"max_degree": args.max_degree}
        D = zero_dimensional_dual(F, y, strategy, tol, order, **kwargs)
        out.update(degree_bound="full", dim=D.dim, multiplicity=D.dim, **_basis_doc(D))
    elif cmd == "hf":
        profile = dual_dimension_profile(F, y, args.degree, strategy, tol, order)
        out.update(
            degrees=list(range(args.degree + 1)),
            dual_dimensions=profile,
            values=hilbert_function_of_dual(profile, range(args.degree + 1)),
        )
    else:
        cap = GCORNER_MAX_DEGREE if args.max_degree is None else args.max_degree
        G = g_corners(F, y, tol, order, strategy, max_degree=cap)
        doc["verification"] = {
            "g_corner_stopping_rule": G.rule,
            "verified": G.verified,
            "verified_degree": G.degree,
        }
        if not G.verified:
            code = EXIT_UNVERIFIED
        out.update(_gcorner_doc(G))
        if cmd == "scorners":
            out["s_corners"] = _exponents(sorted(s_corners(G.ideal), reverse=True))
        elif cmd in ("hilbpoly", "regularity", "dimmult"):
            data = hilbert_series_data(G.ideal)
            if cmd == "hilbpoly":
                out.update(_hp_doc(data))
            elif cmd == "regularity":
                out["regularity"] = data.regularity
            else:
                dimension, mult = dimension_and_multiplicity(data, F, y, tol, order, strategy)
                out.update(dimension=dimension, multiplicity=int(mult), hilbert_polynomial=data.hp_string())
    return doc, code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        doc, code = run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read system file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PointNotOnVarietyError, DimensionError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(dump_json(doc) if args.output == "json" else dump_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
