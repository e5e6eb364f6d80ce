from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Optional

from realclass.models import GroupSpec, Report, Verdict
from realclass.perm import Group
from realclass.prime_graph import delta_star
from realclass.real_classes import real_class_data
from realclass.structure import center, is_p_closed, is_p_nilpotent, is_solvable, o_lower, o_p, o_upper

# Largest integer a double holds exactly; larger ones are written as strings.
MAX_SAFE_INT = 2**53 - 1


def group_invariants(G: Group) -> dict[str, Any]:
    return {
        "order": G.order,
        "center_order": center(G).order,
        "solvable": is_solvable(G),
        "two_closed": is_p_closed(G, 2),
        "two_nilpotent": is_p_nilpotent(G, 2),
        "o2prime_upper_order": o_upper(G, 2).order,
        "o2prime_lower_order": o_lower(G, 2).order,
        "o2_order": o_p(G, 2).order,
    }


def build_report(spec: GroupSpec, G: Group, verdicts: Iterable[Verdict] = (), status: str = "complete") -> Report:
    return Report(
        group=spec,
        order=G.order,
        invariants=group_invariants(G),
        real_sizes=real_class_data(G).sizes,
        graph=delta_star(G),
        verdicts=tuple(verdicts),
        status=status,
    )


def json_safe(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [json_safe(v) for v in sorted(obj)]
    return obj


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(json_safe(obj), sort_keys=True, indent=2) + "\n"


def emit_report(obj: Any, path: Optional[Path]) -> str:
    """Write `obj` (a Report, anything with to_json, or plain data) to path, or return it."""
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    elif isinstance(obj, list):
        obj = [o.to_json() if hasattr(o, "to_json") else o for o in obj]
    text = dumps(obj)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
