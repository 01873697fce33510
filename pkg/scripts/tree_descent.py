"""Print the first levels of the tree in L order and walk the chain 2^(n+2)-3.

    python scripts/tree_descent.py --depth 4 --terms 12
"""

import argparse

from wellext.tree import Cmp, chain_s, sorted_by_L, tree_L_compare, tree_level


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--terms", type=int, default=10)
    args = ap.parse_args()

    nodes = range(2 ** (args.depth + 1) - 1)
    print("L order:", " ".join(map(str, sorted_by_L(nodes))))
    for n in range(args.terms):
        a, b = chain_s(n), chain_s(n + 1)
        step = tree_L_compare(b, a)
        print(f"s({n + 1}) = {b:>8} (level {tree_level(b):>2})  {step.value:>6}  s({n}) = {a}")
        assert step == Cmp.BEFORE


if __name__ == "__main__":
    main()
