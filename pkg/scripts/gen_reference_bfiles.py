#!/usr/bin/env python3
"""Regenerate the reference b-files under tests/data (offset 1, 10000 terms).

The values come from the brute-force membership-table oracle in
tests/oracle.py, not from the package, so comparisons between the two
stay meaningful.  Run from anywhere; paths are anchored to this file.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracle import oracle_triples  # noqa: E402

COUNT = 10000
TARGETS = {
    "b005228.txt": ("A005228", 1),
    "b030124.txt": ("A030124", 2),
    "b225687.txt": ("A225687", 3),
}


def main() -> None:
    rows = oracle_triples(COUNT)
    data_dir = ROOT / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for filename, (oeis_id, column) in TARGETS.items():
        path = data_dir / filename
        with open(path, "w", encoding="utf-8") as sink:
            sink.write(
                f"# {oeis_id}, terms 1..{COUNT}, "
                "regenerated by scripts/gen_reference_bfiles.py\n"
            )
            for row in rows:
                sink.write(f"{row[0]} {row[column]}\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
