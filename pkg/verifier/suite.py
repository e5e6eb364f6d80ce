from __future__ import annotations

import logging
import re
import time
from typing import Callable, Dict, Iterable, List, Optional

from realclass.models import Verdict
from realclass.perm import Group
from realclass.structure import NORMAL_SUBGROUP_CAP
from verifier import statements as st

logger = logging.getLogger(__name__)

Check = Callable[[Group, int], Verdict]


class UnknownStatement(KeyError):
    def __init__(self, statement_id: str):
        super().__init__(statement_id)
        self.statement_id = statement_id

    def __str__(self) -> str:
        return f"Unknown statement id {self.statement_id!r}; known: {', '.join(STATEMENT_IDS)}"


def _plain(fn: Callable[[Group], Verdict]) -> Check:
    return lambda G, normal_cap: fn(G)


# Default run order. Sub-items of Lemma 2.1 and Prop 3.3 are selectable on their own.
REGISTRY: Dict[str, Check] = {
    "Lemma2.1": st.check_lemma_2_1,
    "ExtendedCentralizer": _plain(st.check_extended_centralizer),
    "Lemma2.2": st.check_lemma_2_2,
    "Lemma2.3": _plain(st.check_lemma_2_3),
    "Lemma2.4": _plain(st.check_lemma_2_4),
    "Lemma2.5": _plain(st.check_lemma_2_5_all),
    "Lemma2.6": _plain(st.check_lemma_2_6),
    "Lemma2.7": _plain(st.check_lemma_2_7_all),
    "ChillagMann": _plain(st.check_chillag_mann),
    "Lemma3.1": _plain(st.check_lemma_3_1),
    "Lemma3.2": st.check_lemma_3_2,
    "Prop3.3": st.check_prop_3_3,
    "TheoremA": _plain(st.check_theorem_A),
    "Theorem3.5": _plain(st.check_theorem_3_5),
    "Lemma3.6": _plain(st.check_lemma_3_6),
    "TheoremB": _plain(st.check_theorem_B),
    "Lemma4.1": _plain(st.check_lemma_4_1),
    "Lemma4.2": st.check_lemma_4_2,
    "Lemma4.3": _plain(st.check_lemma_4_3),
    "Theorem4.4": _plain(st.check_theorem_4_4),
    "Theorem4.5": _plain(st.check_theorem_4_5),
    "TheoremC": _plain(st.check_theorem_C),
}

STATEMENT_IDS: tuple[str, ...] = tuple(REGISTRY)

SUB_STATEMENTS: Dict[str, Check] = {
    "Lemma2.1.1": _plain(st.check_lemma_2_1_1),
    "Lemma2.1.2": _plain(st.check_lemma_2_1_2),
    "Lemma2.1.3": _plain(st.check_lemma_2_1_3),
    "Lemma2.1.4": _plain(st.check_lemma_2_1_4),
    "Lemma2.1.5": st.check_lemma_2_1_5,
    "Lemma2.1.6": st.check_lemma_2_1_6,
    "Prop3.3.1": st.check_prop_3_3_1,
    "Prop3.3.2": st.check_prop_3_3_2,
}

ALIASES: Dict[str, str] = {
    "Theorem3.4": "TheoremA",
    "Theorem3.7": "TheoremB",
}

# per-prime parts, e.g. "Lemma2.7[p=3]"
_PER_PRIME = re.compile(r"(Lemma2\.[57])\[p=(\d+)\]")


def _lookup(statement_id: str) -> Check:
    sid = ALIASES.get(statement_id, statement_id)
    if sid in REGISTRY:
        return REGISTRY[sid]
    if sid in SUB_STATEMENTS:
        return SUB_STATEMENTS[sid]
    m = _PER_PRIME.fullmatch(sid)
    if m:
        check = st.check_lemma_2_5 if m.group(1) == "Lemma2.5" else st.check_lemma_2_7
        p = int(m.group(2))
        return lambda G, normal_cap: check(G, p)
    raise UnknownStatement(statement_id)


def resolve_selection(selection: Optional[Iterable[str]]) -> List[str]:
    """None selects every statement; aliases map to their canonical ids; order is kept."""
    if selection is None:
        return list(STATEMENT_IDS)
    out: List[str] = []
    for raw in selection:
        sid = ALIASES.get(raw.strip(), raw.strip())
        _lookup(sid)
        if sid not in out:
            out.append(sid)
    return out


def parse_selection(text: Optional[str]) -> Optional[List[str]]:
    """Comma-separated ids from the command line; an empty string selects nothing."""
    if text is None:
        return None
    return resolve_selection(t for t in text.split(",") if t.strip())


def run_suite(
    G: Group,
    selection: Optional[Iterable[str]] = None,
    *,
    normal_cap: int = NORMAL_SUBGROUP_CAP,
    budget_seconds: Optional[float] = None,
) -> List[Verdict]:
    """
    Run the selected statements in order. When the budget runs out, the
    remaining statements are not started and the returned list is shorter
    than the selection.
    """
    ids = resolve_selection(selection)
    start = time.monotonic()
    verdicts: List[Verdict] = []
    for sid in ids:
        if budget_seconds is not None and time.monotonic() - start > budget_seconds:
            logger.warning(
                "Budget of %.1fs exhausted after %d of %d statements (group order %d)",
                budget_seconds,
                len(verdicts),
                len(ids),
                G.order,
            )
            break
        verdict = _lookup(sid)(G, normal_cap)
        if not verdict.passed:
            logger.debug("%s failed: %s", sid, verdict.witness)
        verdicts.append(verdict)
    return verdicts


def replay_verdict(G: Group, verdict: Verdict, *, normal_cap: int = NORMAL_SUBGROUP_CAP) -> bool:
    """Re-run the statement; True when a failing verdict comes back with an identical witness."""
    again = _lookup(verdict.statement_id)(G, normal_cap)
    return not verdict.passed and again == verdict
