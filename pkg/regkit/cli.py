#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Command line
============

``regkit run FILE`` executes one session script; ``regkit corpus DIR`` runs
every ``*.rk`` script of a directory and prints a pass/fail table. The exit
status is 0 when every check passed, 1 after an engine error and 2 when a
cross-check failed (2 takes precedence).
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from dotenv import load_dotenv
from joblib import Parallel, delayed

from .script.parser import parse_field
from .script.report import corpus_table, summarize
from .script.runner import EXIT_CROSSCHECK, EXIT_ERROR, EXIT_OK, RunFlags, run_file
from .util.exceptions import ParameterError, RegkitError, ScriptError
from .util.utils import env_n_jobs
from .version import version

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)


def _field(text: str):
    try:
        return parse_field(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regkit", description="Castelnuovo-Mumford regularity toolkit"
    )
    parser.add_argument("--version", action="version", version=f"regkit {version}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="Run a session script")
    p_run.add_argument("file", help="Path to the script")
    p_run.add_argument("--field", type=_field, default=None, help="Override the field: qq or fp<P>")
    p_run.add_argument("--max-v", type=int, default=None, help="Largest power for sequence commands")
    p_run.add_argument("--json", dest="json_out", default=None, help="Write the JSON report here")
    p_run.add_argument("--csv", dest="csv_out", default=None, help="Write (v, reg) rows here")
    p_run.add_argument("--timing", action="store_true", help="Record wall-clock timings")
    p_run.add_argument("--n-jobs", type=int, default=None, help="Workers for per-v computations")

    p_corpus = sub.add_parser("corpus", help="Run every *.rk script of a directory")
    p_corpus.add_argument("directory", help="Directory holding the scripts")
    p_corpus.add_argument("--field", type=_field, default=None, help="Override the field: qq or fp<P>")
    p_corpus.add_argument("--max-v", type=int, default=None, help="Largest power for sequence commands")
    p_corpus.add_argument("--json", dest="json_out", default=None, help="Directory for per-script JSON reports")
    p_corpus.add_argument("--n-jobs", type=int, default=None, help="Scripts run concurrently")
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fdesc:
        fdesc.write(text)


def _run_one(path: str, flags: RunFlags, field_override) -> Tuple[str, str, int, Optional[str]]:
    try:
        doc = run_file(path, flags, field_override)
    except ScriptError as exc:
        return path, f"error: {exc}", EXIT_ERROR, None
    return path, doc.status, doc.exit_code, doc.to_json()


def cmd_run(args: argparse.Namespace) -> int:
    flags = RunFlags(max_v=args.max_v, timing=args.timing, n_jobs=args.n_jobs)
    try:
        doc = run_file(args.file, flags, args.field)
    except ScriptError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(summarize(doc))
    _write(args.json_out, doc.to_json())
    _write(args.csv_out, doc.to_csv())
    return doc.exit_code


def cmd_corpus(args: argparse.Namespace) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        raise ParameterError(f"{root} is not a directory")
    files = sorted(str(p) for p in root.glob("*.rk"))
    if not files:
        raise ParameterError(f"no *.rk scripts in {root}")
    n_jobs = args.n_jobs if args.n_jobs is not None else env_n_jobs()
    flags = RunFlags(max_v=args.max_v)
    outcomes = Parallel(n_jobs=n_jobs)(delayed(_run_one)(f, flags, args.field) for f in files)
    rows: List[Tuple[str, str, int]] = []
    for path, status, code, text in outcomes:
        rows.append((os.path.basename(path), status, code))
        if args.json_out is not None and text is not None:
            _write(os.path.join(args.json_out, Path(path).stem + ".json"), text)
    sys.stdout.write(corpus_table(rows))
    codes = {code for _, _, code in rows}
    if EXIT_CROSSCHECK in codes:
        return EXIT_CROSSCHECK
    if EXIT_ERROR in codes:
        return EXIT_ERROR
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        if args.command == "run":
            return cmd_run(args)
        return cmd_corpus(args)
    except RegkitError as exc:
        logger.error("%s", exc)
        return EXIT_ERROR
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
