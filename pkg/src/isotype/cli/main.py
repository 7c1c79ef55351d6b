#!/usr/bin/env python3
"""
Command-line entry point: ``isotype <build|verify|decompose|catalog>``.

Each run:
1. Loads the spec file (or starts from an empty spec)
2. Adds the ad hoc construction and task given on the command line
3. Runs the tasks of the chosen command, builds first
4. Emits the reports as JSON or text and compares them with a golden file
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Union

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from isotype.cli.commands import BUILDERS, DECOMPOSERS, VERIFIERS, run_tasks
from isotype.cli.resolve import SpecContext
from isotype.config import get_default_threads
from isotype.errors import ConfigError, SpecError
from isotype.models.report import Status
from isotype.models.spec import AlgSpec, Builder, Command, TaskSpec, dump_spec
from isotype.storage import ReportStorage, SpecStorage
from isotype.sweep import SweepOptions
from isotype.utils.formatting import render_reports

logger = logging.getLogger(__name__)

FAMILIES = {
    "gl": Builder.GL,
    "sp": Builder.SP,
    "so": Builder.SO,
    "composition": Builder.COMPOSITION,
    "structurable": Builder.STRUCTURABLE,
    "kantor": Builder.KANTOR,
    "exceptional": Builder.EXCEPTIONAL,
}

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def setup_logging(verbosity: int) -> None:
    """One RichHandler on stderr; WARNING by default, -v INFO, -vv DEBUG."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level)


def parse_param(text: str) -> tuple[str, Union[bool, int, str]]:
    """``key=value`` with integer and true/false values converted."""
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    value: Union[bool, int, str] = raw
    if raw.lower() in ("true", "false"):
        value = raw.lower() == "true"
    elif raw.lstrip("-").isdigit():
        value = int(raw)
    return key, value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="Path to an .alg.json spec file")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--sample", type=positive_int, help="Sample N tuples per identity")
    common.add_argument("--seed", type=int, default=0, help="Seed for sampling (default: 0)")
    common.add_argument("--threads", type=positive_int, help="Worker processes for sweeps")
    common.add_argument("--of", help="Object the ad hoc task acts on")
    common.add_argument("--family", choices=sorted(FAMILIES), help="Catalog family to build")
    common.add_argument(
        "--param",
        action="append",
        type=parse_param,
        default=[],
        metavar="KEY=VALUE",
        help="Parameter of --family, e.g. w=2 (repeatable)",
    )
    common.add_argument("--output", help="Write the reports to this file instead of stdout")
    common.add_argument("--golden", help="Compare the emitted bytes with this file")
    common.add_argument("--timings", action="store_true", help="Record elapsed milliseconds")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="isotype",
        description="Exact verification of Jordan, J-ternary, structurable and Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", parents=[common], help="Assemble L(J,T), K(A) or (J,T)")
    build.add_argument("--mode", choices=sorted(BUILDERS))
    build.add_argument("--derivations", choices=["inner", "full"])
    build.add_argument("--name", help="Register the result under this name")

    verify = sub.add_parser("verify", parents=[common], help="Check defining identities")
    verify.add_argument("--target", choices=sorted(VERIFIERS))

    decompose = sub.add_parser("decompose", parents=[common], help="Isotypic decompositions")
    kinds = decompose.add_mutually_exclusive_group()
    kinds.add_argument("--mode", choices=sorted(DECOMPOSERS))
    kinds.add_argument("--sl2", dest="mode", action="store_const", const="sl2")
    kinds.add_argument("--sl2xsl2", dest="mode", action="store_const", const="sl2xsl2")
    decompose.add_argument("--idempotent", help="Element name for sl2xsl2, split and peirce")

    sub.add_parser("catalog", parents=[common], help="Dimensions and identities of catalog objects")
    return parser


def load_spec(args: argparse.Namespace) -> AlgSpec:
    """The spec file, or an empty spec, with the command-line construction and task added."""
    spec = SpecStorage().load(args.spec) if args.spec else AlgSpec()
    command = Command(args.command)
    data = dump_spec(spec)

    of = args.of
    if args.family:
        of = of or args.family
        data.setdefault("constructions", {})[of] = {
            "builder": FAMILIES[args.family].value,
            "params": dict(args.param),
        }
    elif args.param:
        raise SpecError("--param needs --family")

    target = getattr(args, "target", None)
    mode = getattr(args, "mode", None)
    adhoc = target or mode or (command == Command.CATALOG and of)
    if adhoc:
        if of is None:
            raise SpecError(f"{command.value} needs --of or --family for an ad hoc task")
        task = TaskSpec(
            command=command,
            of=of,
            target=target,
            mode=mode,
            name=getattr(args, "name", None),
            idempotent=getattr(args, "idempotent", None),
            derivations=getattr(args, "derivations", None),
        )
        tasks = [t for t in data.get("tasks", []) if t["command"] != command.value]
        tasks.append(task.model_dump(mode="json", exclude_none=True))
        data["tasks"] = tasks

    try:
        return AlgSpec.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        cause = (error.get("ctx") or {}).get("error")
        message = str(cause) if cause is not None else error["msg"]
        raise SpecError(message, path=args.spec or "<command line>") from exc


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one isotype command.

    Returns:
        0 when every report passes, 1 on a failing or errored report or a golden mismatch,
        2 on usage, spec or configuration errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(args.verbose)
    err = Console(stderr=True)
    try:
        threads = args.threads or get_default_threads()
        spec = load_spec(args)
    except (SpecError, ConfigError) as exc:
        err.print(f"error: {exc}", markup=False)
        return EXIT_USAGE

    options = SweepOptions(sample=args.sample, seed=args.seed, threads=threads)
    ctx = SpecContext(spec, options)
    command = Command(args.command)
    logger.info("running %s with %s", command.value, options)
    try:
        reports = list(run_tasks(ctx, command, spec.tasks, args.timings))
    except SpecError as exc:
        err.print(f"error: {exc}", markup=False)
        return EXIT_USAGE

    content = render_reports(reports, args.format, args.timings)
    storage = ReportStorage()
    if args.output:
        storage.save(args.output, content)
    else:
        sys.stdout.write(content)

    ok = all(r.status == Status.PASS for r in reports)
    if args.golden and not storage.matches_golden(args.golden, content):
        err.print(f"output differs from {args.golden}", markup=False)
        ok = False
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
