from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from corpus.families import build_group
from realclass.models import GroupOutcome, GroupSpec
from realclass.perm import ClosureExceedsCap
from realclass.structure import NORMAL_SUBGROUP_CAP
from verifier.suite import resolve_selection, run_suite

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """
    Apply fn to every item, in input order. jobs > 1 fans out to worker
    processes; fn and items must then be picklable.
    """
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=1))


def verify_spec(
    spec: GroupSpec,
    statements: Optional[Sequence[str]] = None,
    cap: Optional[int] = None,
    normal_cap: int = NORMAL_SUBGROUP_CAP,
    budget_seconds: Optional[float] = None,
) -> GroupOutcome:
    """Build one group and run the suite on it. A group over the element cap is skipped, not failed."""
    start = time.monotonic()
    try:
        G = build_group(spec, cap)
    except ClosureExceedsCap as e:
        logger.warning("Skipping %s: %s", spec.name, e)
        return GroupOutcome(spec, "skipped", detail=str(e))
    ids = resolve_selection(statements)
    verdicts = run_suite(G, ids, normal_cap=normal_cap, budget_seconds=budget_seconds)
    status = "complete" if len(verdicts) == len(ids) else "incomplete"
    elapsed = time.monotonic() - start
    failures = sum(1 for v in verdicts if not v.passed)
    logger.info("%s (order %d): %d verdicts, %d failing, %.2fs", spec.name, G.order, len(verdicts), failures, elapsed)
    return GroupOutcome(spec, status, G.order, tuple(verdicts), elapsed_seconds=elapsed)


def _verify_job(args: tuple) -> GroupOutcome:
    return verify_spec(*args)


def run_corpus(
    specs: Sequence[GroupSpec],
    statements: Optional[Sequence[str]] = None,
    *,
    jobs: int = 1,
    cap: Optional[int] = None,
    normal_cap: int = NORMAL_SUBGROUP_CAP,
    budget_seconds: Optional[float] = None,
) -> List[GroupOutcome]:
    ids = tuple(resolve_selection(statements))
    jobs_args = [(spec, ids, cap, normal_cap, budget_seconds) for spec in specs]
    logger.info("Verifying %d groups with %d statement(s), %d worker(s)", len(specs), len(ids), jobs)
    return map_ordered(_verify_job, jobs_args, jobs)


def summarize(outcomes: Sequence[GroupOutcome]) -> dict:
    return {
        "groups": len(outcomes),
        "complete": sum(1 for o in outcomes if o.status == "complete"),
        "incomplete": sum(1 for o in outcomes if o.status == "incomplete"),
        "skipped": sum(1 for o in outcomes if o.status == "skipped"),
        "failing_groups": sorted(o.spec.name for o in outcomes if o.failed),
        "failing_verdicts": sum(1 for o in outcomes for v in o.verdicts if not v.passed),
    }
