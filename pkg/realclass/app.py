from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Union

from corpus.families import FamilyParameterError, build_group, family_from_tokens
from corpus.group_file import GroupFileError, ingest
from corpus.manifest import load_corpus
from corpus.report import build_report, emit_report
from corpus.search import find_example48, hunt_conjecture
from corpus.sweep import run_corpus, summarize
from realclass.config import AppConfig, load_config
from realclass.models import GroupOutcome, Report
from realclass.perm import ClosureExceedsCap, CycleParseError
from verifier.suite import UnknownStatement, parse_selection, resolve_selection, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="realclass",
        description="Real conjugacy classes, real class sizes and their prime graph for permutation groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--verbose", action="store_true", help="Debug logging")
        p.add_argument("--json", type=Path, default=None, dest="json_out", help="Write JSON here instead of stdout")

    analyze = sub.add_parser("analyze", help="Report on one group file or one family")
    analyze.add_argument("target", nargs="+", help="A group file, or family tokens such as: dihedral 6")
    analyze.add_argument("--statements", default=None, help="Comma-separated statement ids to run")
    common(analyze)

    verify = sub.add_parser("verify", help="Run the statement suite over a corpus")
    verify.add_argument("--statements", default=None, help="Comma-separated statement ids (default: all)")
    verify.add_argument("--corpus", default="builtin", help="`builtin`, a directory of group files, or a file")
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes")
    common(verify)

    hunt = sub.add_parser("hunt", help="2-closed groups with a disconnected real-class prime graph")
    hunt.add_argument("--corpus", default="builtin")
    hunt.add_argument("--jobs", type=int, default=None)
    common(hunt)

    example = sub.add_parser("example48", help="Find the order-48 example in a corpus")
    example.add_argument("--corpus", default="builtin")
    common(example)
    return ap


def _setup_logging(cfg: AppConfig, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, cfg.log_level, logging.INFO)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)


def _write(obj: Any, path: Optional[Path]) -> None:
    text = emit_report(obj, path)
    if path is None:
        sys.stdout.write(text)
    else:
        logger.info("Wrote %s", path)


def _analyze(args: argparse.Namespace, cfg: AppConfig) -> int:
    if len(args.target) == 1 and Path(args.target[0]).is_file():
        specs = ingest(Path(args.target[0]))
    else:
        specs = [family_from_tokens(args.target)]
    ids = resolve_selection(parse_selection(args.statements))

    reports: List[Union[Report, GroupOutcome]] = []
    failed = False
    for spec in specs:
        try:
            G = build_group(spec, cfg.element_cap)
        except ClosureExceedsCap as e:
            logger.warning("Skipping %s: %s", spec.name, e)
            reports.append(GroupOutcome(spec, "skipped", detail=str(e)))
            continue
        verdicts = run_suite(
            G,
            ids,
            normal_cap=cfg.normal_subgroup_cap,
            budget_seconds=cfg.group_budget_seconds,
        )
        failed = failed or any(not v.passed for v in verdicts)
        status = "complete" if len(verdicts) == len(ids) else "incomplete"
        reports.append(build_report(spec, G, verdicts, status))
    _write(reports, args.json_out)
    return EXIT_FAILURE if failed else EXIT_OK


def _verify(args: argparse.Namespace, cfg: AppConfig) -> int:
    selection = parse_selection(args.statements)
    specs = load_corpus(args.corpus, cfg)
    outcomes = run_corpus(
        specs,
        selection,
        jobs=args.jobs or cfg.jobs,
        cap=cfg.element_cap,
        normal_cap=cfg.normal_subgroup_cap,
        budget_seconds=cfg.group_budget_seconds,
    )
    summary = summarize(outcomes)
    for o in outcomes:
        for v in o.verdicts:
            for leaf in v.failures():
                logger.error("%s: %s failed, witness %s", o.spec.name, leaf.statement_id, leaf.witness)
    logger.info(
        "%d groups: %d complete, %d incomplete, %d skipped, %d failing verdict(s)",
        summary["groups"],
        summary["complete"],
        summary["incomplete"],
        summary["skipped"],
        summary["failing_verdicts"],
    )
    if args.json_out is not None:
        _write({"summary": summary, "groups": [o.to_json() for o in outcomes]}, args.json_out)
    else:
        _write({"summary": summary}, None)
    return EXIT_FAILURE if summary["failing_verdicts"] else EXIT_OK


def _hunt(args: argparse.Namespace, cfg: AppConfig) -> int:
    specs = load_corpus(args.corpus, cfg)
    findings = hunt_conjecture(specs, cfg.element_cap, args.jobs or cfg.jobs)
    _write({"groups_scanned": len(specs), "findings": [f.to_json() for f in findings]}, args.json_out)
    return EXIT_OK


def _example48(args: argparse.Namespace, cfg: AppConfig) -> int:
    result = find_example48(load_corpus(args.corpus, cfg), cfg.element_cap)
    _write(result.to_json(), args.json_out)
    return EXIT_OK if result.found is not None else EXIT_FAILURE


COMMANDS = {
    "analyze": _analyze,
    "verify": _verify,
    "hunt": _hunt,
    "example48": _example48,
}


def cli_main(argv: Sequence[str], cfg: Optional[AppConfig] = None) -> int:
    try:
        args = _build_parser().parse_args(list(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    cfg = load_config() if cfg is None else cfg
    _setup_logging(cfg, args.verbose)
    try:
        return COMMANDS[args.command](args, cfg)
    except (FamilyParameterError, GroupFileError, CycleParseError, UnknownStatement, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
