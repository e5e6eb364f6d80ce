from __future__ import annotations

import argparse
from pathlib import Path

from corpus.group_file import emit_groups
from corpus.search import alt4_c4_candidates
from realclass.config import DATA_DIR

DEFAULT_OUT = DATA_DIR / "groups" / "order48_candidates.txt"

HEADER = (
    "Alt4 semidirect C4, one group per fingerprint over every s in Sym4 with s^4 = 1.",
    "Regenerate with: python -m corpus.export_candidates",
)


def main() -> None:
    ap = argparse.ArgumentParser(description="Write the Alt4 x| C4 candidate groups as a group file.")
    ap.add_argument("-o", "--out", type=Path, default=DEFAULT_OUT, help="Output group file")
    args = ap.parse_args()

    specs = alt4_c4_candidates()
    out_path = args.out.expanduser().resolve()
    out_path.parent.mkdir(parents=True, exist_ok=True)
    emit_groups(specs, out_path, HEADER)

    print(f"Wrote {out_path} ({len(specs)} candidates).")
    for s in specs:
        print(f" - {s.name}")


if __name__ == "__main__":
    main()
