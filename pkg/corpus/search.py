from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Dict, List, Optional, Sequence

from corpus.families import build_group, family
from corpus.sweep import map_ordered
from realclass.models import GroupSpec
from realclass.perm import ClosureExceedsCap, Group, Permutation, generate, perm_format
from realclass.prime_graph import delta_star, graph_to_json, is_connected
from realclass.real_classes import real_class_data
from realclass.structure import (
    center,
    fingerprint_consistent,
    group_fingerprint,
    is_p_closed,
    is_p_nilpotent,
    o_p,
    o_upper,
    quotient,
)

logger = logging.getLogger(__name__)

EXAMPLE_ORDER = 48
EXAMPLE_REAL_SIZES = frozenset({1, 3, 8})


@dataclass(frozen=True)
class Example48Result:
    found: Optional[GroupSpec]
    properties: Dict[str, bool] = field(default_factory=dict)
    matches: tuple[str, ...] = ()
    order_48_checked: int = 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "found": None if self.found is None else self.found.to_json(),
            "properties": self.properties,
            "matches": list(self.matches),
            "order_48_checked": self.order_48_checked,
            "isomorphism_check": "fingerprint",
        }


@dataclass(frozen=True)
class Finding:
    name: str
    order: int
    graph: Dict[str, Any]

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "order": self.order, "delta_star": self.graph}


def example48_properties(G: Group) -> Dict[str, bool]:
    """The properties of the order-48 example, each evaluated on its own."""
    sym3 = build_group(family("symmetric", 3))
    sym4 = build_group(family("symmetric", 4))
    o2 = o_p(G, 2)
    return {
        "order_48": G.order == EXAMPLE_ORDER,
        "real_sizes_1_3_8": set(real_class_data(G).sizes) == EXAMPLE_REAL_SIZES,
        "equals_o2prime": o_upper(G, 2).order == G.order,
        "o2_order_8": o2.order == 8,
        "mod_o2_matches_sym3": fingerprint_consistent(quotient(G, o2).group, sym3),
        "mod_center_matches_sym4": fingerprint_consistent(quotient(G, center(G)).group, sym4),
        "not_two_closed": not is_p_closed(G, 2),
        "not_two_nilpotent": not is_p_nilpotent(G, 2),
    }


def find_example48(specs: Sequence[GroupSpec], cap: Optional[int] = None) -> Example48Result:
    """First corpus group of order 48 with every example property; not-found when none qualifies."""
    matches: List[GroupSpec] = []
    checked = 0
    first_props: Dict[str, bool] = {}
    for spec in specs:
        try:
            G = build_group(spec, cap)
        except ClosureExceedsCap:
            continue
        if G.order != EXAMPLE_ORDER:
            continue
        checked += 1
        props = example48_properties(G)
        logger.debug("%s: %s", spec.name, props)
        if all(props.values()):
            if not matches:
                first_props = props
            matches.append(spec)
    if not matches:
        logger.info("No order-48 example among %d group(s) of order 48", checked)
        return Example48Result(None, {}, (), checked)
    logger.info("Order-48 example: %s", matches[0].name)
    return Example48Result(matches[0], first_props, tuple(s.name for s in matches), checked)


def _hunt_one(spec: GroupSpec, cap: Optional[int]) -> Optional[Finding]:
    try:
        G = build_group(spec, cap)
    except ClosureExceedsCap:
        return None
    if not is_p_closed(G, 2):
        return None
    graph = delta_star(G)
    if is_connected(graph):
        return None
    return Finding(spec.name, G.order, graph_to_json(graph))


def hunt_conjecture(specs: Sequence[GroupSpec], cap: Optional[int] = None, jobs: int = 1) -> List[Finding]:
    """2-closed groups whose real-class prime graph is disconnected. Expected empty; reported, not asserted."""
    results = map_ordered(partial(_hunt_one, cap=cap), list(specs), jobs)
    findings = [f for f in results if f is not None]
    logger.info("Hunt over %d groups: %d finding(s)", len(specs), len(findings))
    return findings


def _alt4_on_8() -> List[Permutation]:
    rest = tuple(range(4, 8))
    return [Permutation((1, 2, 0, 3) + rest), Permutation((0, 2, 3, 1) + rest)]


def alt4_c4_candidates() -> List[GroupSpec]:
    """
    Alt4 x| C4 for every action, one group per fingerprint. The generator
    of C4 acts by conjugation with some s in Sym4 with s^4 = 1, realized on
    8 points as s on 1..4 together with the 4-cycle (5,6,7,8).
    """
    sym4 = build_group(family("symmetric", 4))
    a, b = _alt4_on_8()
    seen: Dict[Any, GroupSpec] = {}
    for s in sym4.sorted_elements:
        if not (s ** 4).is_identity():
            continue
        c = Permutation(s.images + (5, 6, 7, 4))
        G = generate([a, b, c], 8)
        fp = group_fingerprint(G)
        if fp in seen:
            continue
        seen[fp] = GroupSpec(
            name=f"alt4_semidirect_c4[{perm_format(s)}]",
            degree=8,
            generator_strings=(perm_format(a), perm_format(b), perm_format(c)),
            source="search",
        )
    return list(seen.values())
