"""Command-line interface.

Exit codes: 0 success or passing verification, 1 failing verification,
2 hypothesis refusal, 3 input error.
"""
import argparse
import json
import sys

import numpy as np

from .dsl import parse_integrand_spec
from .exceptions import HypothesisError, WulffError
from .integrand import pointwise_max, pointwise_min
from .render import RenderSpec, render_svg
from . import spherical_convex as sc
from . import wulff

EXIT_OK, EXIT_FAIL, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2, 3
DEFAULT_K = 720


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def read_gamma(text):
    """DSL string, or ``@path`` to read the DSL string from a file."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    return parse_integrand_spec(text.strip())


def _dump(obj, path):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p, gammas):
    for name in gammas:
        p.add_argument(f"--{name}", required=True, help="integrand DSL string or @file")
    p.add_argument("-K", type=int, default=DEFAULT_K, help="number of sampling directions")
    p.add_argument("--out", help="write polygon JSON here (stdout if omitted)")
    p.add_argument("--svg", help="also render the result to this SVG file")


def build_parser():
    parser = _Parser(prog="wulffkit", description="Planar Wulff shapes and their max/min duality checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("wulff", help="Wulff shape of one integrand")
    _add_common(p, ["gamma"])
    p.add_argument("--method", choices=["direct", "spherical"], default="direct")

    p = sub.add_parser("dual", help="dual Wulff shape of one integrand")
    _add_common(p, ["gamma"])

    for name in ("max", "min"):
        p = sub.add_parser(name, help=f"Wulff shape of the pointwise {name} of two integrands")
        _add_common(p, ["gamma1", "gamma2"])

    p = sub.add_parser("verify", help="run one of the verifiers")
    p.add_argument(
        "which",
        choices=["theorem1", "section4", "corollary", "maehara", "double-polar", "dual-boundary", "convexity"],
    )
    p.add_argument("--gamma")
    p.add_argument("--gamma1")
    p.add_argument("--gamma2")
    p.add_argument("-K", type=int, default=DEFAULT_K)
    p.add_argument("--tol", type=float, help="override the default tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--points", help="JSON file with sphere points [[u, v, w], ...]")
    p.add_argument("--n-points", type=int, default=6, help="random cap points when --points is absent")
    p.add_argument("--report", help="write the report JSON here (stdout if omitted)")

    p = sub.add_parser("render", help="SVG of W1, W2, W(max), W(min)")
    p.add_argument("--gamma1", required=True)
    p.add_argument("--gamma2", required=True)
    p.add_argument("-K", type=int, default=DEFAULT_K)
    p.add_argument("--svg", required=True)
    p.add_argument("--panels", action="store_true", help="2x2 grid instead of one overlay")
    p.add_argument("--width", type=int, default=400)
    p.add_argument("--height", type=int, default=400)
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError("missing required option(s): " + ", ".join("--" + n for n in missing))
    return [read_gamma(getattr(args, n)) for n in names]


def _sphere_set(args):
    if args.points:
        with open(args.points) as fh:
            return sc.FiniteSphereSet(json.load(fh))
    rng = np.random.default_rng(args.seed)
    return sc.FiniteSphereSet(sc.random_cap_points(args.n_points, 1.0, rng))


def _verify(args):
    which = args.which
    if which in ("theorem1", "section4", "corollary"):
        g1, g2 = _need(args, "gamma1", "gamma2")
        fn = {"theorem1": wulff.verify_theorem1, "section4": wulff.verify_section4,
              "corollary": wulff.verify_corollary}[which]
        report = fn(g1, g2, args.K, args.tol)
    elif which == "dual-boundary":
        (g,) = _need(args, "gamma")
        report = wulff.verify_dual_boundary(g, args.K, args.tol)
    elif which == "convexity":
        (g,) = _need(args, "gamma")
        report = wulff.verify_convexity(g, args.K, args.tol)
    else:
        W = _sphere_set(args)
        fn = sc.verify_maehara if which == "maehara" else sc.verify_double_polar
        report = fn(W, args.trials, args.seed)
    report.seed = args.seed
    _dump(report.to_dict(), args.report)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _construct(args):
    if args.command in ("wulff", "dual"):
        (g,) = _need(args, "gamma")
        if args.command == "dual":
            result = wulff.dual_wulff(g, args.K)
        elif args.method == "spherical":
            result = wulff.wulff_spherical(g, args.K)
        else:
            result = wulff.wulff_direct(g, args.K)
    else:
        g1, g2 = _need(args, "gamma1", "gamma2")
        combine = pointwise_max if args.command == "max" else pointwise_min
        result = wulff.wulff_direct(combine(g1, g2), args.K)
    _dump(result.to_dict(), args.out)
    if args.svg:
        render_svg([result.shape], path=args.svg)
    return EXIT_OK


def _render(args):
    g1, g2 = _need(args, "gamma1", "gamma2")
    w1 = wulff.wulff_direct(g1, args.K).shape
    w2 = wulff.wulff_direct(g2, args.K).shape
    wmax = wulff.wulff_direct(pointwise_max(g1, g2), args.K).shape
    wmin = wulff.wulff_direct(pointwise_min(g1, g2), args.K).shape
    spec = RenderSpec(width=args.width, height=args.height)
    if args.panels:
        render_svg(None, spec, args.svg, panels=[[w1], [w2], [wmax], [wmin]],
                   titles=["W(gamma1)", "W(gamma2)", "W(max)", "W(min)"])
    else:
        render_svg([w1, w2, wmax, wmin], spec, args.svg)
    return EXIT_OK


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "render":
            return _render(args)
        return _construct(args)
    except HypothesisError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (WulffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
