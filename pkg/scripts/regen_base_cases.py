"""Rebuild the frozen base-case catalog by exhaustive search."""

import argparse
import time
from pathlib import Path

from trominoes.basecases import DATA_FILE, dump_base_cases, generate_base_cases
from trominoes.board import validate_tiling

OUT = Path(__file__).resolve().parents[1] / "src" / "trominoes" / "data" / DATA_FILE


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    start = time.perf_counter()
    entries = generate_base_cases()
    for e in entries:
        assert validate_tiling(e.tiling), e.board
    args.out.write_text(dump_base_cases(entries))
    print(f"{len(entries)} entries -> {args.out} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
