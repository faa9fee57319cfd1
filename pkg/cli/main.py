"""
``lolrun``: lex, parse and run a LOLCODE program on N processing elements.

Exit codes: 0 success, 1 runtime error, 2 lex/parse/usage error,
3 deadlock.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import TextIO

from cli.config import DumpMode, OutputMode, RunConfig
from diagnostics import LolError, format_diagnostic
from lexing.lexer import tokenize
from lexing.tokens import Token
from parsing.parser import parse_program
from parsing.pretty import dump_tree
from pgas_runtime.launcher import RunResult, spawn

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME_ERROR = 1
EXIT_USAGE_ERROR = 2
EXIT_DEADLOCK = 3

_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lolrun",
        description="Run a LOLCODE program on parallel processing elements.",
    )
    parser.add_argument("source", type=Path, help="program file (.lol)")
    parser.add_argument(
        "--np", type=int, default=1, metavar="N", help="number of PEs (default 1)"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for WHATEVR/WHATEVAR (default 0)"
    )
    parser.add_argument(
        "--per-pe",
        action="store_true",
        help="group output by PE under '=== PE k ===' headers",
    )
    dumps = parser.add_mutually_exclusive_group()
    dumps.add_argument(
        "--dump-tokens", action="store_true", help="print tokens and stop"
    )
    dumps.add_argument("--dump-ast", action="store_true", help="print the AST and stop")
    parser.add_argument(
        "--max-barrier-wait",
        type=float,
        default=5.0,
        metavar="SECONDS",
        help="quiescence before blocked PEs report a deadlock (default 5)",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more logging (repeatable)"
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    dump = DumpMode.NONE
    if args.dump_tokens:
        dump = DumpMode.TOKENS
    elif args.dump_ast:
        dump = DumpMode.AST
    return RunConfig(
        source_path=args.source,
        n_pes=args.np,
        seed=args.seed,
        output_mode=OutputMode.PER_PE if args.per_pe else OutputMode.INTERLEAVED,
        dump=dump,
        max_barrier_wait=args.max_barrier_wait,
        verbosity=args.verbose,
    )


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n").replace("\t", "\\t")


def format_tokens(tokens: list[Token]) -> str:
    """One token per line: ``kind<TAB>text<TAB>line:col``."""
    return "".join(
        f"{token.kind_name}\t{_escape(token.text)}\t{token.span}\n" for token in tokens
    )


def format_output(result: RunResult, mode: OutputMode) -> str:
    if mode is OutputMode.PER_PE:
        lines = []
        for pe_result in result.pes:
            lines.append(f"=== PE {pe_result.pe} ===")
            lines.extend(pe_result.output)
    else:
        lines = [line for _, line in result.output_log]
    return "".join(f"{line}\n" for line in lines)


def run(config: RunConfig, stdout: TextIO, stderr: TextIO) -> int:
    """Execute one configured invocation and return its exit code."""
    path = str(config.source_path)
    try:
        source = config.source_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as error:
        print(f"lolrun: cannot read {path}: {error}", file=stderr)
        return EXIT_USAGE_ERROR

    try:
        tokens = tokenize(source)
        if config.dump is DumpMode.TOKENS:
            stdout.write(format_tokens(tokens))
            return EXIT_OK
        program = parse_program(tokens)
    except LolError as error:
        print(format_diagnostic(path, error), file=stderr)
        return EXIT_USAGE_ERROR
    if config.dump is DumpMode.AST:
        stdout.write(dump_tree(program))
        return EXIT_OK

    result = spawn(
        program,
        config.n_pes,
        config.seed,
        max_barrier_wait=config.max_barrier_wait,
    )
    stdout.write(format_output(result, config.output_mode))
    if result.deadlock is not None:
        print(f"{path}: {result.deadlock}", file=stderr)
        return EXIT_DEADLOCK
    if result.failure is not None:
        print(format_diagnostic(path, result.failure), file=stderr)
        return EXIT_RUNTIME_ERROR
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Entry point of the ``lolrun`` console script.

    Parameters
    ----------
    argv : list of str or None, optional
        Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns
    -------
    int
        Process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    try:
        config = config_from_args(args)
    except ValueError as error:
        print(f"lolrun: {error}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    logging.basicConfig(
        level=_LOG_LEVELS[min(config.verbosity, len(_LOG_LEVELS) - 1)],
        format="%(levelname)s %(threadName)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    log.info("running %s on %d PE(s)", config.source_path, config.n_pes)
    return run(config, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
