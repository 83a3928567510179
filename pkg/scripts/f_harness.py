"""Compare the closed-form width-4 one-domino generating function with exact DP counts."""

import argparse
import json

from trominoes.analytics import f_harness


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=7)
    args = ap.parse_args()
    print(json.dumps(f_harness(args.terms - 1).to_dict(), indent=2))


if __name__ == "__main__":
    main()
