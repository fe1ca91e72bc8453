"""Command-line interface.

Exit codes: 0 success, 1 invalid input or I/O failure, 2 a mathematical
invariant failed (including a mismatch between two methods).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import ContinuedFraction, canonical, cf_expand, cf_value, mirror, parse_cf, parse_fraction, parity
from .cluster import Seed, mutation_trace
from .errors import InvariantError
from .knot import alexander_skein_oracle, alexander_specialized, seifert_data
from .paths import cluster_via_paths, f_polynomial, path_from_labels
from .report import run_verify
from .svg import render
from .triangle import build

DEFAULT_MAX_Q = 1000
WARN_N = 40
EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 is reserved for invariants
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, fraction: bool = True) -> None:
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--output", metavar="PATH", help="write the result here instead of stdout")
    if fraction:
        p.add_argument("fraction", nargs="?", help="reduced p/q with 0 < p/q < 1")
        p.add_argument("--cf", metavar="A1,A2,...", help="continued fraction instead of p/q")
        p.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q, help="largest accepted denominator")
        p.add_argument("--max-n", type=int, default=None,
                       help="largest accepted triangle count (default: $BRIDGECLUSTER_MAX_N, else unlimited)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bridgecluster",
                     description="Cluster variables and Alexander polynomials of two-bridge links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cf", help="continued fraction expansions, mirror and parity")
    _add_common(p)

    p = sub.add_parser("triangle", help="list the ancestral triangle, optionally as SVG")
    _add_common(p)
    p.add_argument("--svg", metavar="PATH", help="write a deterministic SVG drawing")
    p.add_argument("--seifert", action="store_true", help="mark the Seifert path")
    p.add_argument("--path", metavar="LABELS", help="overlay a path given as p/q labels joined by commas")

    p = sub.add_parser("cluster", help="cluster variable X and F-polynomial")
    _add_common(p)
    p.add_argument("--method", choices=("paths", "mutation", "both"), default="both")
    p.add_argument("--trace", action="store_true", help="dump every intermediate seed")

    p = sub.add_parser("alexander", help="Alexander polynomial")
    _add_common(p)
    p.add_argument("--method", choices=("spec", "skein", "both"), default="spec",
                   help="spec = specialised F-polynomial, skein = skein recursion")

    p = sub.add_parser("verify", help="exhaustive checks over all fractions up to a denominator")
    _add_common(p, fraction=False)
    p.add_argument("--q-max", type=int, default=25)
    p.add_argument("--jobs", type=int, default=1)
    return parser


# -- input --------------------------------------------------------------


def _max_n(args) -> int | None:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("BRIDGECLUSTER_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"BRIDGECLUSTER_MAX_N must be an integer, got {env!r}") from None
    return None


def _input_cf(args) -> ContinuedFraction:
    if (args.fraction is None) == (args.cf is None):
        raise ValueError("give exactly one of p/q or --cf")
    if args.cf is not None:
        cf = parse_cf(args.cf)
    else:
        cf = cf_expand(parse_fraction(args.fraction))
    q = cf_value(cf).q
    if q > args.max_q:
        raise ValueError(f"denominator {q} exceeds --max-q {args.max_q}")
    cap = _max_n(args)
    if cap is not None and cf.num_triangles > cap:
        raise ValueError(f"N = {cf.num_triangles} triangles exceeds the cap {cap}")
    if cf.num_triangles > WARN_N:
        print(f"warning: N = {cf.num_triangles} > {WARN_N}; path enumeration grows quickly",
              file=sys.stderr)
    return cf


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands --------------------------------------------------------


def cmd_cf(args) -> tuple[str, int]:
    cf = _input_cf(args)
    value = cf_value(cf)
    canon = cf_expand(value)
    alt = cf_expand(value, "alternate")
    mir = mirror(canon)
    if args.format == "json":
        return _json({
            "fraction": str(value),
            "canonical": list(canon.terms),
            "alternate": list(alt.terms),
            "mirror": {"fraction": str(value.complement()), "cf": list(mir.terms)},
            "parity": str(parity(value)),
        }), EXIT_OK
    if args.format == "latex":
        p, q = value.p, value.q
        return (f"\\frac{{{p}}}{{{q}}} = {_latex_cf(canon)} = {_latex_cf(alt)}, "
                f"\\quad \\frac{{{q - p}}}{{{q}}} = {_latex_cf(mir)}\n"), EXIT_OK
    lines = [
        f"fraction:  {value}",
        f"canonical: {canon}",
        f"alternate: {alt}",
        f"mirror:    {value.complement()} = {mir}",
        f"parity:    {parity(value)} (mod 2)",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _latex_cf(cf: ContinuedFraction) -> str:
    return "[" + ", ".join(map(str, cf.terms)) + "]"


def cmd_triangle(args) -> tuple[str, int]:
    cf = _input_cf(args)
    at = build(cf)
    seifert = seifert_data(at) if args.seifert else None
    path = path_from_labels(at, args.path.split(",")) if args.path else None
    if args.svg:
        svg = render(at, path=path, seifert=seifert.path if seifert else None)
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)

    rows = [
        {
            "index": t.index,
            "orientation": t.orientation,
            "fan": t.fan,
            "position": t.pos,
            "vertices": [str(at.label(t.left)), str(at.label(t.right)), str(at.label(t.new))],
        }
        for t in at.triangles
    ]
    if args.format == "json":
        out = {"fraction": str(at.value), "cf": list(cf.terms), "N": at.N, "triangles": rows}
        if seifert:
            out["seifert_path"] = seifert.path.labels(at)
            out["seifert_edges"] = [[str(at.label(a)), str(at.label(b))] for a, b in seifert.path.edges()]
            out["fan_sides"] = [str(s) for s in seifert.fan_sides]
        if path:
            out["path"] = path.labels(at)
        return _json(out), EXIT_OK

    if args.format == "latex":
        lines = [r"\begin{tabular}{rcccl}", r"$i$ & orientation & fan & position & vertices \\ \hline"]
        for r in rows:
            lines.append(f"$T_{{{r['index']}}}$ & {r['orientation']} & {r['fan']} & {r['position']} & "
                         f"${', '.join(r['vertices'])}$ \\\\")
        lines.append(r"\end{tabular}")
        if seifert:
            lines.append("Seifert path: $" + r" \to ".join(seifert.path.labels(at)) + "$")
        return "\n".join(lines) + "\n", EXIT_OK

    lines = [f"AT({at.value})  cf {cf}  N = {at.N}", f"orientations: {''.join(t.orientation for t in at.triangles)}"]
    lines.append(f"{'T':>4} {'side':>4} {'fan':>4} {'pos':>4}  stacked on -> new")
    for t in at.triangles:
        lines.append(f"{t.index:>4} {t.orientation:>4} {t.fan:>4} {t.pos:>4}  "
                     f"{at.label(t.left)},{at.label(t.right)} -> {at.label(t.new)}")
    if seifert:
        lines.append(f"seifert path: {seifert.path.describe(at)}")
        for a, b in seifert.path.edges():
            lines.append(f"  edge {at.label(a)} - {at.label(b)}")
        lines.append("fan sides: " + ", ".join(f"F{k}={s}" for k, s in enumerate(seifert.fan_sides, 1)))
    if path:
        lines.append(f"path: {path.describe(at)}")
    if args.svg:
        lines.append(f"svg written to {args.svg}")
    return "\n".join(lines) + "\n", EXIT_OK


def _seed_text(i: int, seed: Seed) -> list[str]:
    head = "initial seed" if i == 0 else f"after mu_{i}"
    lines = [f"[{i}] {head}"]
    for j, x in enumerate(seed.x, 1):
        lines.append(f"    x{j} = {x.to_fraction_text()}")
    lines.append("    y = (" + ", ".join(str(u) for u in seed.y) + ")")
    lines.append(f"    quiver: {seed.quiver}")
    return lines


def cmd_cluster(args) -> tuple[str, int]:
    cf = _input_cf(args)
    at = build(cf)
    trace = mutation_trace(cf) if args.method != "paths" or args.trace else None
    by_mutation = trace[-1].x[-1] if trace else None
    by_paths = cluster_via_paths(at) if args.method != "mutation" else None
    x = by_paths if by_paths is not None else by_mutation
    match = None
    if args.method == "both":
        match = by_paths == by_mutation
    f = f_polynomial(at) if by_paths is not None else x.set_x_to_one()

    if match is False:
        diff = (f"paths:    {by_paths.to_fraction_text()}\n"
                f"mutation: {by_mutation.to_fraction_text()}\n")
        print("error: path expansion and mutation disagree\n" + diff, file=sys.stderr, end="")
        return "", EXIT_INVARIANT

    if args.format == "json":
        out = {"fraction": str(at.value), "cf": list(cf.terms), "N": at.N, "method": args.method,
               "X": x.to_json(), "F": f.to_json(), "F_terms": len(f)}
        if match is not None:
            out["methods_agree"] = match
        if args.trace:
            out["trace"] = [s.to_json() for s in trace]
        return _json(out), EXIT_OK

    latex = args.format == "latex"
    lines = []
    if latex:
        lines.append(f"X_{{{at.value}}} = {x.to_fraction_text(True)}")
        lines.append(f"F_{{{at.value}}} = {f.to_text(True)}")
    else:
        lines.append(f"fraction: {at.value}  cf {cf}  N = {at.N}")
        lines.append(f"X = {x.to_fraction_text()}")
        lines.append(f"F = {f.to_text()}  ({len(f)} terms)")
        if match:
            lines.append("paths and mutation agree")
        if args.trace:
            for i, seed in enumerate(trace):
                lines.extend(_seed_text(i, seed))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_alexander(args) -> tuple[str, int]:
    cf = _input_cf(args)
    value = cf_value(cf)
    spec = alexander_specialized(cf) if args.method != "skein" else None
    oracle = alexander_skein_oracle(canonical(cf)) if args.method != "spec" else None
    delta = spec.delta if spec else oracle
    match = None
    if spec and oracle is not None:
        match = spec.delta == oracle
    if match is False:
        diff = f"specialized: {spec.delta}\nskein:       {oracle}\n"
        print("error: specialization and skein recursion disagree\n" + diff, file=sys.stderr, end="")
        return "", EXIT_INVARIANT

    if args.format == "json":
        return _json({
            "fraction": str(value),
            "cf": list(cf.terms),
            "t_signs": list(spec.t) if spec else None,
            "e_signs": list(spec.e) if spec else None,
            "d_times_2": spec.d_times_2 if spec else None,
            "s": spec.s if spec else None,
            "alexander_u_poly": delta.to_json(),
            "oracle_match": match,
        }), EXIT_OK
    if args.format == "latex":
        return f"\\Delta_{{{value}}}(t) = {delta.to_text(True)}\n", EXIT_OK
    lines = [f"fraction: {value}  cf {cf}", f"Delta = {delta}"]
    if spec:
        d = spec.d_times_2
        lines.append(f"d = {d // 2 if d % 2 == 0 else f'{d}/2'}  s = {spec.s:+d}")
        lines.append("t = (" + ", ".join(f"{v:+d}" for v in spec.t) + ")")
        lines.append("e = (" + ", ".join(f"{v:+d}" for v in spec.e) + ")")
        lines.append(f"F-hat = {spec.f_specialized}")
    if match:
        lines.append("specialization and skein recursion agree")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    report = run_verify(args.q_max, args.jobs)
    code = EXIT_OK if report.ok else EXIT_INVARIANT
    if args.format == "json":
        return _json(report.to_json()), code
    if args.format == "latex":
        return report.to_latex(), code
    return report.to_text(), code


COMMANDS = {
    "cf": cmd_cf,
    "triangle": cmd_triangle,
    "cluster": cmd_cluster,
    "alexander": cmd_alexander,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
        if text and args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        elif text:
            sys.stdout.write(text)
        return code
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
