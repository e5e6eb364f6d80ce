from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from realclass.prime_graph import PrimeGraph, graph_to_json


@dataclass(frozen=True)
class GroupSpec:
    name: str
    degree: int
    generator_strings: tuple[str, ...]
    # "family", a group-file path, or "search"
    source: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "degree": self.degree,
            "generators": list(self.generator_strings),
            "source": self.source,
        }


@dataclass(frozen=True)
class Verdict:
    statement_id: str
    applicable: bool
    passed: bool
    witness: Optional[Dict[str, Any]] = None
    sampled: bool = False
    # evaluated hypotheses in order; evaluation stops at the first false one
    hypotheses: tuple[tuple[str, bool], ...] = ()
    parts: tuple[Verdict, ...] = ()

    def __post_init__(self):
        if not self.applicable and (not self.passed or self.witness is not None):
            raise ValueError(f"Inapplicable verdict for {self.statement_id} must pass without a witness")
        if self.passed and self.witness is not None:
            raise ValueError(f"Passing verdict for {self.statement_id} carries a witness")

    def failures(self) -> List[Verdict]:
        """Failing leaves: the parts that failed, or this verdict when it has no parts."""
        if self.passed:
            return []
        if not self.parts:
            return [self]
        return [f for p in self.parts for f in p.failures()]

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "statement": self.statement_id,
            "applicable": self.applicable,
            "passed": self.passed,
            "sampled": self.sampled,
            "hypotheses": dict(self.hypotheses),
            "witness": self.witness,
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


@dataclass
class Report:
    group: GroupSpec
    order: int
    invariants: Dict[str, Any]
    real_sizes: tuple[int, ...]
    graph: PrimeGraph
    verdicts: tuple[Verdict, ...] = ()
    status: str = "complete"

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.to_json(),
            "order": self.order,
            "invariants": self.invariants,
            "real_class_sizes": list(self.real_sizes),
            "delta_star": graph_to_json(self.graph),
            "verdicts": [v.to_json() for v in self.verdicts],
            "status": self.status,
        }


@dataclass(frozen=True)
class GroupOutcome:
    """Result of one group in a corpus sweep."""

    spec: GroupSpec
    # "complete", "incomplete" (budget ran out) or "skipped" (closure over the cap)
    status: str
    order: Optional[int] = None
    verdicts: tuple[Verdict, ...] = ()
    detail: str = ""
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def failed(self) -> bool:
        return any(not v.passed for v in self.verdicts)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.spec.to_json(),
            "status": self.status,
            "order": self.order,
            "detail": self.detail,
            "verdicts": [v.to_json() for v in self.verdicts],
        }
