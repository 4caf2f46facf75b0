# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Command-line entry point.

Usage:
    pumping analyze "a^*b^*" --witnesses
    pumping apply complement lang.dfa -o complement.dfa
    pumping construct binary --p1 1 --p2 2 --p3 5
    pumping verify all --report report.md
    pumping search --states 3 --alphabet 2 --op union --constant mps
    pumping oracle lang.dfa --bound 10

stdout carries results only; logs go to stderr. Exit codes: 0 all checks
passed, 1 a check failed, 2 bad input.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from config.analysis_config import AnalysisConfig, get_analysis_config
from shared.automata.codec import dumps, loads
from shared.automata.dfa import Alphabet, Dfa
from shared.automata.errors import AutomatonError, AutomatonInputError
from shared.automata.regex import parse_regex, regex_symbols
from shared.schemas import PARAM_NAMES, VerificationStatus, WitnessFamily, WitnessSpec
from shared.utils.logging import setup_package_logging
from services.harness.report import to_json, to_markdown
from services.harness.search import chart
from services.harness.suites import SUITES, run_suite
from services.harness.ranges import MEASURES
from services.langops import BINARY_OPERATIONS, UNARY_OPERATIONS, get_operation, loopify
from services.oracle import OracleCrossValidator
from services.pumping import analyze
from services.witnesses import construct

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ============================================
# Input / output helpers
# ============================================

def read_automaton(source: str, alphabet: Optional[str] = None) -> Dfa:
    """
    Load a DFA file, or parse the argument as a regular expression.

    Without --alphabet the alphabet of a regular expression is the set of
    symbols it mentions, which changes sc when the intended alphabet is larger.
    """
    path = Path(source)
    if path.is_file():
        return loads(path.read_text(encoding="utf-8"))
    if alphabet:
        return parse_regex(source, Alphabet.of(alphabet))
    symbols = regex_symbols(source) or ["a"]
    logger.warning(f"No DFA file {source!r}; reading it as a regex over {''.join(symbols)}")
    return parse_regex(source, Alphabet.of(symbols))


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


# ============================================
# Subcommands
# ============================================

def cmd_analyze(args: argparse.Namespace, config: AnalysisConfig) -> int:
    d = read_automaton(args.source, args.alphabet)
    report = analyze(d, node_budget=config.node_budget)
    if args.format == "text":
        lines = [f"mpc={report.mpc} mpl={report.mpl} mps={report.mps} sc={report.sc}"]
        if args.witnesses:
            w = report.witnesses
            lines.append(f"mpc witness: {w.mpc!r}")
            lines.append(f"mpl witness: {w.mpl!r}")
            if w.mps is not None:
                lines.append(f"mps witness: u={w.mps.u!r} w={w.mps.w!r} v={w.mps.v!r}")
            else:
                lines.append("mps witness: None")
        write_output("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    exclude = None if args.witnesses else {"witnesses", "certificates"}
    payload = report.model_dump(mode="json", exclude=exclude)
    write_output(json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n", args.output)
    return EXIT_OK


def cmd_apply(args: argparse.Namespace, config: AnalysisConfig) -> int:
    d = read_automaton(args.first, args.alphabet)
    if args.operation == "loopify":
        if args.state is None or args.symbol is None:
            raise AutomatonInputError("loopify needs --state and --symbol")
        result = loopify(d, args.state, args.symbol)
        out = result.raw if args.raw else result.minimal
    else:
        arity, fn = get_operation(args.operation)
        if arity == 2:
            if args.second is None:
                raise AutomatonInputError(f"{args.operation} needs a second automaton")
            out = fn(d, read_automaton(args.second, args.alphabet))
        else:
            if args.second is not None:
                raise AutomatonInputError(f"{args.operation} takes one automaton")
            out = fn(d)
    write_output(dumps(out, args.format), args.output)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, config: AnalysisConfig) -> int:
    params = {name: getattr(args, name) for name in PARAM_NAMES if getattr(args, name) is not None}
    spec = WitnessSpec(family=WitnessFamily(args.family), params=params)
    try:
        automata = construct(spec, combine=args.combine)
    except KeyError as e:
        raise AutomatonInputError(f"{args.family} needs --{e.args[0]}") from None
    if args.format == "json":
        documents = [json.loads(dumps(d, "json")) for d in automata]
        body = documents[0] if len(documents) == 1 else documents
        write_output(json.dumps(body, separators=(",", ":")) + "\n", args.output)
    else:
        write_output("\n".join(dumps(d, "text") for d in automata), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: AnalysisConfig) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    summaries, results = [], []
    for name in names:
        summary, rows = run_suite(name, config)
        summaries.append(summary)
        results.extend(rows)
    markdown = to_markdown(summaries, results)
    if args.report:
        Path(args.report).write_text(markdown, encoding="utf-8")
        logger.info(f"Wrote report {args.report}")
    if args.json:
        Path(args.json).write_text(to_json(summaries, results), encoding="utf-8")
        logger.info(f"Wrote JSON report {args.json}")
    sys.stdout.write(markdown)
    return EXIT_OK if all(s.ok for s in summaries) else EXIT_FAILED


def cmd_search(args: argparse.Namespace, config: AnalysisConfig) -> int:
    table = chart(
        args.op,
        args.constant,
        states=args.states,
        alphabet=args.alphabet,
        samples=config.samples,
        seed=config.default_seed,
        exhaustive=args.exhaustive,
    )
    sys.stdout.write(table.to_markdown())
    outliers = table.outliers()
    if outliers:
        logger.error(f"Values outside the admissible range: {outliers}")
        return EXIT_FAILED
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, config: AnalysisConfig) -> int:
    d = read_automaton(args.source, args.alphabet)
    report = OracleCrossValidator(config.oracle_bound).verify(d)
    sys.stdout.write(report.model_dump_json(indent=2, exclude={"timestamp"}) + "\n")
    return EXIT_FAILED if report.status == VerificationStatus.FAIL else EXIT_OK


# ============================================
# Parser
# ============================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pumping",
        description="Minimal pumping constants of regular languages.",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Compute mpc, mpl, mps and sc")
    p.add_argument("source", help="DFA file (text or JSON) or a regular expression")
    p.add_argument("--alphabet", help="Alphabet of a regular expression, e.g. ab")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--witnesses", action="store_true", help="Include witnesses and certificates")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_analyze)

    operations = sorted(UNARY_OPERATIONS) + sorted(BINARY_OPERATIONS) + ["loopify"]
    p = sub.add_parser("apply", help="Apply a language operation")
    p.add_argument("operation", choices=operations)
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.add_argument("--alphabet")
    p.add_argument("--state", type=int, help="loopify: state")
    p.add_argument("--symbol", help="loopify: symbol")
    p.add_argument("--raw", action="store_true", help="loopify: skip minimization")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_apply)

    p = sub.add_parser("construct", help="Build a witness family member")
    p.add_argument("family", choices=[f.value for f in WitnessFamily])
    for name in PARAM_NAMES:
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--combine", action="store_true", help="intersection: emit the intersection itself")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("verify", help="Run experiment suites")
    p.add_argument("suite", choices=["all"] + list(SUITES))
    p.add_argument("--max-param", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, help="Seed of random populations")
    p.add_argument("--report", help="Write the Markdown report here")
    p.add_argument("--json", help="Write the JSON report here")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("search", help="Chart observed constants of an operation")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--op", required=True, choices=sorted(UNARY_OPERATIONS) + sorted(BINARY_OPERATIONS))
    p.add_argument("--constant", required=True, choices=list(MEASURES))
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, help="Seed of random populations")
    p.add_argument("--exhaustive", action="store_true", help="Enumerate every DFA of the shape")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("oracle", help="Cross-check against the brute-force oracle")
    p.add_argument("source")
    p.add_argument("--alphabet")
    p.add_argument("--bound", type=int, help="Word length bound")
    p.set_defaults(handler=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = get_analysis_config().with_overrides(
        default_seed=getattr(args, "seed", None),
        log_level=args.log_level.upper() if args.log_level else None,
        max_param=getattr(args, "max_param", None),
        samples=getattr(args, "samples", None),
        oracle_bound=getattr(args, "bound", None),
        node_budget=getattr(args, "node_budget", None),
    )
    setup_package_logging(config.log_level)

    try:
        return args.handler(args, config)
    except (AutomatonError, ValidationError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
