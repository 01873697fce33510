"""Width of tree truncations versus the longest descent the zigzag construction forces.

    python scripts/inversion_growth.py --max-depth 7
"""

import argparse

from wellext.analysis import descends_in, forced_inversion_scan
from wellext.tree import truncate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-depth", type=int, default=6)
    args = ap.parse_args()
    print(f"{'depth':>5} {'nodes':>6} {'width':>6} {'descent':>8}  ok")
    for depth in range(args.max_depth + 1):
        rel = truncate(depth)
        report = forced_inversion_scan(rel)
        ok = not report.constructible or (report.extension.extends(rel) and descends_in(report.extension, report.witness))
        print(f"{depth:>5} {rel.universe_size:>6} {report.width:>6} {report.witness_length:>8}  {ok}")


if __name__ == "__main__":
    main()
