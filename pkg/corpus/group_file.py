from __future__ import annotations

from pathlib import Path
from typing import Iterable, List

from realclass.models import GroupSpec
from realclass.perm import CycleParseError, perm_parse


class GroupFileError(ValueError):
    def __init__(self, path: Path | str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def parse_group_lines(lines: Iterable[str], source: str) -> List[GroupSpec]:
    """
    One group per line: `name ; degree ; gen1 ; gen2 ; ...` in 1-based cycle
    notation. Blank lines and `#` comments are skipped.
    """
    specs: List[GroupSpec] = []
    seen: dict[str, int] = {}
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) < 3:
            raise GroupFileError(source, line_no, "expected `name ; degree ; generator ; ...`")
        name, degree_text, gens = fields[0], fields[1], fields[2:]
        if not name:
            raise GroupFileError(source, line_no, "empty group name")
        if name in seen:
            raise GroupFileError(source, line_no, f"duplicate group name {name!r} (first on line {seen[name]})")
        try:
            degree = int(degree_text)
        except ValueError:
            raise GroupFileError(source, line_no, f"degree must be an integer, got {degree_text!r}") from None
        if degree < 1:
            raise GroupFileError(source, line_no, f"degree must be positive, got {degree}")
        for g in gens:
            try:
                perm_parse(g, degree)
            except CycleParseError as e:
                raise GroupFileError(source, line_no, str(e)) from None
        seen[name] = line_no
        specs.append(GroupSpec(name=name, degree=degree, generator_strings=tuple(gens), source=source))
    return specs


def ingest(path: Path) -> List[GroupSpec]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Missing group file: {path}")
    return parse_group_lines(path.read_text(encoding="utf-8").splitlines(), str(path))


def format_group_line(spec: GroupSpec) -> str:
    return " ; ".join([spec.name, str(spec.degree), *spec.generator_strings])


def emit_groups(specs: Iterable[GroupSpec], path: Path, header: Iterable[str] = ()) -> None:
    lines = [f"# {h}" for h in header]
    lines += [format_group_line(s) for s in specs]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
