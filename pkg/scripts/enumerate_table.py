"""Tabulate |U_N,p| from both enumerators against the Weyl dimension.

    python3 scripts/enumerate_table.py --type A2 --max 3
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time

from tropical_flags.canonical import enumerate_bounded, enumerate_crystal
from tropical_flags.cartan import ResourceGuard, named_type, weyl_dim


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--type", default="A2")
    parser.add_argument("--max", type=int, default=2, help="largest entry of p")
    parser.add_argument("--no-bounded", action="store_true", help="skip the exhaustive box scan")
    args = parser.parse_args()

    datum = named_type(args.type)
    print(f"{'p':<16}{'crystal':>9}{'bounded':>9}{'dim':>7}{'sec':>8}")
    ok = True
    for p in itertools.product(range(args.max + 1), repeat=datum.n):
        start = time.perf_counter()
        crystal = enumerate_crystal(datum, p)
        bounded = "-"
        if not args.no_bounded:
            try:
                found = enumerate_bounded(datum, p)
                bounded = str(len(found))
                ok &= found == crystal
            except ResourceGuard:
                bounded = "cap"
        dim = weyl_dim(datum, p)
        ok &= len(crystal) == dim
        print(f"{str(p):<16}{len(crystal):>9}{bounded:>9}{dim:>7}{time.perf_counter() - start:>8.2f}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
