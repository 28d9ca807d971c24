"""Command line front end.

Exit codes: 0 when the run completed (an "eliminated" verdict is still a
completed run), 2 for bad input, 3 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import feasibility, graphs, params, reports, sweep, talg, uniform
from .exact import as_fraction

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    pass


def _load_graph(args) -> graphs.Graph:
    if bool(args.gen) == bool(args.file):
        raise InputError("give exactly one of --gen and --file")
    if args.gen:
        return graphs.from_spec(args.gen.replace("-", "_"))
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return graphs.from_edge_list(text, name=path.stem)


def _check_vertex(g: graphs.Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise InputError(f"vertex {x} is out of range 0..{g.n - 1}")


def cmd_params(args) -> dict:
    cp = params.ClassicalParams(args.D, as_fraction(args.q), as_fraction(args.alpha), as_fraction(args.beta))
    return reports.params_report(cp)


def cmd_feasibility(args) -> dict:
    if args.family is not None:
        if args.family == 1:
            rep = feasibility.family1_eliminate(args.q, args.D)
        else:
            try:
                rep = feasibility.family2_eliminate(args.q, args.D)
            except feasibility.DNotCovered as exc:
                raise InputError(str(exc)) from None
        return reports.feasibility_report(rep)
    if args.alpha is None or args.beta is None:
        raise InputError("give --family or both --alpha and --beta")
    cp = params.ClassicalParams(args.D, as_fraction(args.q), as_fraction(args.alpha), as_fraction(args.beta))
    return reports.feasibility_report(feasibility.integrality_screen(cp))


def cmd_sweep(args) -> dict:
    ckpt = args.checkpoint_dir or os.environ.get(sweep.CHECKPOINT_ENV)
    if ckpt:
        try:
            Path(ckpt).mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise InputError(f"checkpoint directory {ckpt} is not writable: {exc}") from None
        if not os.access(ckpt, os.W_OK):
            raise InputError(f"checkpoint directory {ckpt} is not writable")
    res = sweep.conjecture_sweep(args.q_max, args.d_max, jobs=args.jobs, checkpoint_dir=ckpt)
    return reports.sweep_report(res)


def cmd_graph(args) -> dict:
    return reports.graph_report(_load_graph(args), full=args.full)


def cmd_modules(args) -> dict:
    g = _load_graph(args)
    _check_vertex(g, args.x)
    ctx = talg.build_context(g, args.x, args.mode.replace("-", "_"))
    return reports.modules_report(ctx, talg.decompose(ctx))


def cmd_uniform(args) -> dict:
    g = _load_graph(args)
    _check_vertex(g, args.x)
    if g.is_bipartite():
        ctx = talg.build_context(g, args.x, talg.FULL)
        verdict = uniform.solve_uniform(ctx)
    else:
        ctx = talg.build_context(g, args.x, talg.BIPARTITE_QUOTIENT)
        verdict = uniform.supports_uniform(g, args.x)
    report = reports.uniform_report(g, args.x, verdict)
    if args.check_witness:
        try:
            data = json.loads(Path(args.check_witness).read_text())
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read witness {args.check_witness}: {exc}") from None
        sol = data.get("solution", data)
        U, f = uniform.solution_from_json(sol)
        report["witness_recheck"] = uniform.verify_uniform_solution(ctx, U, f)
    return report


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--config", help="file of 'key = value' lines supplying default flags")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gen", help="generator spec such as hypercube:4 or folded-hypercube:5")
    p.add_argument("--file", help="edge-list file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drgwb", description="Distance-regular graph workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="everything computable from (D, q, alpha, beta)")
    p.add_argument("-D", type=int, required=True)
    p.add_argument("-q", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("feasibility", help="elimination certificates")
    p.add_argument("--family", type=int, choices=(1, 2))
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-D", type=int, required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("sweep", help="k_D / f_D integrality sweep over D divisible by 6")
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint-dir")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("graph", help="distance-regularity of a concrete graph")
    _add_graph_source(p)
    p.add_argument("--full", action="store_true", help="check every p^h_ij, not only c_i, a_i, b_i")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("modules", help="decompose the standard module")
    _add_graph_source(p)
    p.add_argument("-x", type=int, default=0)
    p.add_argument("--mode", choices=("full", "bipartite-quotient", "bipartite_quotient"), default="full")
    p.set_defaults(func=cmd_modules)

    p = sub.add_parser("uniform", help="uniform structure verdict")
    _add_graph_source(p)
    p.add_argument("-x", type=int, default=0)
    p.add_argument("--check-witness", help="JSON report or solution to re-validate against this graph")
    p.set_defaults(func=cmd_uniform)

    for p in sub.choices.values():
        _add_common(p)
    return parser


def _config_args(path: str) -> list[str]:
    """Turn 'key = value' lines into flags; keys are flag names without dashes."""
    out = []
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from None
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise InputError(f"{path}:{n}: expected 'key = value'")
        flag = f"-{key}" if len(key) == 1 else f"--{key.replace('_', '-')}"
        if value.lower() in ("true", "yes") and key == "full":
            out.append(flag)
        else:
            out += [flag, value]
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        # config values go first so explicit flags override them
        if "--config" in argv:
            i = argv.index("--config")
            if i + 1 >= len(argv):
                raise InputError("--config needs a path")
            extra = _config_args(argv[i + 1])
            argv = argv[:1] + extra + argv[1:]
        args = parser.parse_args(argv)
        report = args.func(args)
        text = reports.render(report, args.format)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
