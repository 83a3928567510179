"""Find the width-4 boundary profiles whose tiling counts reproduce Moore's G1 and G2.

A profile gives, for each of the four rows, how far the right boundary sits
past column 3t.  Candidates are the two-level monotone profiles (a, a, b, b)
with a total offset divisible by 3; each one's count sequence for t = 0..T is
compared with the series of G1 and G2.
"""

import argparse

from trominoes.analytics import gf_series, moore_gfs
from trominoes.counting import INTERFACE_PROFILES, InterfaceKind, count_profile


def candidates(span: int):
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if a != b and (2 * a + 2 * b) % 3 == 0:
                yield (a, a, b, b)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=7)
    ap.add_argument("--span", type=int, default=3)
    args = ap.parse_args()
    _, G1, G2 = moore_gfs()
    targets = {"G1": list(gf_series(G1, args.terms - 1)), "G2": list(gf_series(G2, args.terms - 1))}
    for name, seq in targets.items():
        print(f"{name}: {seq}")
        for prof in candidates(args.span):
            got = [count_profile(prof, t) for t in range(args.terms)]
            if got == seq:
                print(f"  matches profile {prof}")
    for kind in (InterfaceKind.DEEP_JOG, InterfaceKind.SHALLOW_JOG):
        print(f"frozen {kind.value}: {INTERFACE_PROFILES[kind]}")


if __name__ == "__main__":
    main()
