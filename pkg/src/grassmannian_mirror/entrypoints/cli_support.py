from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Mapping, NoReturn, Sequence, Tuple

from grassmannian_mirror.core import settings
from grassmannian_mirror.core.constants import (
    EXIT_INVALID_INPUT,
    OUTPUT_FORMATS,
)
from grassmannian_mirror.core.errors import GrMirrorError
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig, load_pipeline_config
from grassmannian_mirror.utils.log_parameters import log_parameters


COMMON_PARAMETER_DOCS = {
    "k": "Subspace dimension of Gr(k,n); 1 <= k < n.",
    "n": "Ambient dimension of Gr(k,n).",
    "command": "Sub-command being run.",
    "output_format": "text | json | svg (svg only for flower and branes).",
    "out_path": "Main artefact path; default outputs/tables or outputs/figures.",
    "tolerance": "Float tolerance for moduli and positivity; exact checks ignore it.",
}


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the invalid-input code instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"[FAIL] {self.prog}: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


def build_parser(prog: str, description: str) -> CliArgumentParser:
    p = CliArgumentParser(prog=prog, description=description)
    p.add_argument("--k", type=int, required=True, help="Subspace dimension k.")
    p.add_argument("--n", type=int, required=True, help="Ambient dimension n.")
    p.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="json")
    p.add_argument("--out", type=Path, default=None, help="Output file (default under outputs/).")
    p.add_argument("--jobs", type=int, default=None, help="Worker threads (default from config).")
    p.add_argument("--tol", type=float, default=None, help="Float tolerance (default 1e-9).")
    p.add_argument("--config", type=Path, default=None, help="YAML config (default config/grmirror.yaml).")
    return p


def resolve_run(args: argparse.Namespace, command: str) -> Tuple[RunConfig, PipelineConfig]:
    """Flags override YAML; YAML overrides built-in defaults."""
    cfg = load_pipeline_config(args.config)
    run = RunConfig(
        k=args.k,
        n=args.n,
        command=command,
        output_format=args.output_format,
        out_path=args.out,
        jobs=args.jobs if args.jobs is not None else cfg.jobs,
        tolerance=args.tol if args.tol is not None else cfg.tolerance,
    )
    return run, cfg


def run_command(
    command: str,
    argv: Sequence[str] | None,
    description: str,
    docs: Mapping[str, str],
    body: Callable[[RunConfig, PipelineConfig], int],
) -> int:
    """
    Parse, resolve, log the banner and run `body`.

    Invalid input (bad grid, format, config) returns EXIT_INVALID_INPUT;
    `body` decides between success and verification failure.
    """
    parser = build_parser(f"gr-mirror {command}", description)
    args = parser.parse_args(argv)

    try:
        run, cfg = resolve_run(args, command)
    except (GrMirrorError, ValueError, FileNotFoundError) as exc:
        print(f"[FAIL] {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    log_parameters(
        command,
        params=run,
        docs={**COMMON_PARAMETER_DOCS, **docs},
        extra={"grid": run.grid, "mode": cfg.mode},
        exclude=("jobs",),
    )
    # stdout must not depend on the worker count
    print(f"[INFO] jobs = {run.jobs}", file=sys.stderr)
    if settings.VERBOSE or cfg.debug:
        settings.debug()

    try:
        return body(run, cfg)
    except GrMirrorError as exc:
        print(f"[FAIL] {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
