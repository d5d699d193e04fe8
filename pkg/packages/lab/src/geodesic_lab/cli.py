from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, NoReturn

from geodesic_lab.core import (
    GeodesicLabError,
    bound_run,
    configure_logging,
    get_logger,
    load_settings,
    new_run_id,
    stable_json_dumps,
)
from geodesic_lab.core.errors import UsageError
from geodesic_lab.io import RunConfig, load_run_config
from geodesic_lab.pipeline import ArtifactKind, Command, PipelineRunner, StageFn
from geodesic_lab.spaces import Family
from geodesic_lab.stages import (
    PROFILE_KINDS,
    stage_generate,
    stage_plot,
    stage_profile,
    stage_verify,
)
from geodesic_lab.verify import SUITE_REGISTRY, Scale
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

# stdout stays free for piping; status and tables go to stderr
console = Console(stderr=True)

PROG = "geodesic-lab"

# generate flags -> family parameter names
_FAMILY_FLAGS = (
    "n",
    "arc_len",
    "branching",
    "depth",
    "width",
    "height",
    "rho",
    "A",
    "rho2",
    "f",
    "extent",
    "resolution",
)


class _Parser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _add_global_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, default=None, help="RunConfig JSON file")
    p.add_argument("--seed", type=int, default=None, help="Override RunConfig.seed")
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="Analyzer worker count (default: GEODESIC_LAB_JOBS or the RunConfig value)",
    )
    p.add_argument(
        "--out-dir",
        type=Path,
        default=None,
        help="Default output directory (default: GEODESIC_LAB_OUT_DIR or ./out)",
    )


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i_min:i_max, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="Generate an example space document")
    _add_global_args(g)
    g.add_argument("--family", required=True, choices=[f.value for f in Family if f is not Family.CUSTOM])
    g.add_argument("--n", type=int)
    g.add_argument("--arc-len", type=int)
    g.add_argument("--branching", type=int)
    g.add_argument("--depth", type=int)
    g.add_argument("--width", type=int)
    g.add_argument("--height", type=int)
    g.add_argument("--rho", help="log_space rho, e.g. lin:0.5")
    g.add_argument("--A", dest="A", type=float)
    g.add_argument("--rho2", help="necklace bead function, e.g. ceilsqrt")
    g.add_argument("--f", help="divergence_necklace bead function, e.g. pow:2")
    g.add_argument("--range", type=_range, dest="index_range", help="i_min:i_max")
    g.add_argument("--extent", type=float)
    g.add_argument("--resolution", type=float)
    g.add_argument("--out", default=None, help="Output document path")

    pr = sub.add_parser("profile", help="Compute a profile CSV for a space document")
    _add_global_args(pr)
    pr.add_argument("kind", choices=[k.value for k in PROFILE_KINDS])
    pr.add_argument("space", help="Space document path")
    pr.add_argument("--r-max", type=float, default=None, help="Largest radius (default: valid_radius)")
    pr.add_argument("--points", type=int, default=40, help="Radius grid size")
    pr.add_argument("--rho1", default="id", help="contraction: rho1 function")
    pr.add_argument("--epsilon", type=float, default=0.0, help="Projection slack")
    pr.add_argument("--div-params", default="1,0,0.5,2", help="divergence: L,A,lam,kappa")
    pr.add_argument("--stride", type=int, default=1, help="divergence: centre stride along gamma")
    pr.add_argument("--L-grid", dest="L_grid", default="1,2,4,8", help="morse: quasi-geodesic constants")
    pr.add_argument("--separations", type=int, default=8, help="morse: endpoint separations")
    pr.add_argument("--anchors", type=int, default=4, help="morse: anchors per separation")
    pr.add_argument("--C", dest="C", type=float, default=4.0, help="geodesic-image: d(segment, Y) floor")
    pr.add_argument("--out", default=None, help="Output CSV path")

    v = sub.add_parser("verify", help="Run a verification suite")
    _add_global_args(v)
    v.add_argument("suite", choices=[s.value for s in SUITE_REGISTRY])
    v.add_argument(
        "--builtin",
        nargs="*",
        default=None,
        help="Builtin spaces by name; bare --builtin (or no --space) runs the suite's own set",
    )
    v.add_argument("--space", action="append", dest="spaces", help="Space document (repeatable)")
    v.add_argument("--scale", choices=[s.value for s in Scale], default=Scale.QUICK.value)
    v.add_argument("--fail-on-warn", action="store_true")
    v.add_argument("--out", default=None, help="Report directory (default: <out-dir>/verify)")

    pl = sub.add_parser("plot", help="Render a profile CSV to SVG")
    _add_global_args(pl)
    pl.add_argument("csv", help="Profile CSV")
    pl.add_argument("out_svg", help="Output SVG path")

    return p


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    params = {k: getattr(args, k) for k in _FAMILY_FLAGS if getattr(args, k) is not None}
    if args.index_range is not None:
        params["i_min"], params["i_max"] = args.index_range
    return params


def _command_args(args: argparse.Namespace) -> dict[str, Any]:
    if args.cmd == "generate":
        return {"family": args.family, "params": _family_params(args), "out": args.out}
    if args.cmd == "profile":
        keys = (
            "kind", "space", "r_max", "points", "rho1", "epsilon", "div_params",
            "stride", "L_grid", "separations", "anchors", "C", "out",
        )
        return {k: getattr(args, k) for k in keys}
    if args.cmd == "verify":
        return {
            "suite": args.suite,
            "builtin": args.builtin or None,
            "spaces": args.spaces,
            "scale": args.scale,
            "fail_on_warn": args.fail_on_warn,
            "out": args.out,
        }
    return {"csv": args.csv, "out_svg": args.out_svg}


_COMMANDS: dict[str, tuple[StageFn, ArtifactKind]] = {
    "generate": (stage_generate, ArtifactKind.SPACE),
    "profile": (stage_profile, ArtifactKind.PROFILE),
    "verify": (stage_verify, ArtifactKind.REPORT),
    "plot": (stage_plot, ArtifactKind.PLOT),
}


def _with_status(name: str, fn: StageFn) -> StageFn:
    def _run_with_status(ctx):
        with console.status(f"[bold]{name.capitalize()}[/] ", spinner="dots"):
            return fn(ctx)

    return _run_with_status


def _build_command(name: str) -> Command:
    fn, produces = _COMMANDS[name]
    return Command(name=name, fn=_with_status(name, fn), produces=frozenset({produces}))


def _print_error(code: str, message: str) -> None:
    sys.stderr.write(stable_json_dumps({"error": code, "message": message}, indent=None) + "\n")
    sys.stderr.flush()


def _jobs(args: argparse.Namespace, cfg: RunConfig, default: int) -> int:
    if args.jobs is not None:
        return int(args.jobs)
    return cfg.jobs if "jobs" in cfg.model_fields_set else default


def main(argv: list[str] | None = None) -> int:
    s = load_settings()
    configure_logging(level=s.log_level, fmt=s.log_format)
    log = get_logger("geodesic_lab")

    try:
        args = _build_parser().parse_args(argv)
        cfg = load_run_config(args.config, seed=args.seed, output_dir=args.out_dir)
    except GeodesicLabError as e:
        _print_error(e.code, str(e))
        return e.exit_code

    jobs = _jobs(args, cfg, s.jobs)
    if jobs < 1:
        _print_error(UsageError.code, f"--jobs must be >= 1, got {jobs}")
        return UsageError.exit_code
    out_dir = Path(args.out_dir or cfg.output_dir or s.out_dir)

    run_id = new_run_id()
    runner = PipelineRunner(_build_command(args.cmd), logger=log)
    meta: dict[str, Any] = {
        "command": args.cmd,
        "args": _command_args(args),
        "config": cfg.to_dict(),
        "jobs": jobs,
    }

    console.print(
        Panel.fit(
            Text(f"{PROG} - {args.cmd}\nrun_id={run_id}\nout_dir={out_dir}", style="bold"),
            title="Run",
        )
    )

    with bound_run(run_id=run_id, command=args.cmd):
        report, report_path = runner.run(
            out_dir=out_dir, run_root=Path(s.run_root), run_id=run_id, meta=meta
        )

    tbl = Table(title="Result", show_header=True, box=None)
    tbl.add_row("status", "[green]ok[/green]" if report.exit_code == 0 else "[red]failed[/red]")
    tbl.add_row("report", str(report_path))
    console.print(tbl)

    err = report.error
    if err is not None:
        _print_error(err.code, err.message)
    return int(report.exit_code)


if __name__ == "__main__":
    raise SystemExit(main())
