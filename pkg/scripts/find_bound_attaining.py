"""Hunt for quadratic embeddings whose balanced-component count attains
the floor for its parity, and build one that attains the cap.

Floor: 2^n - 1 for even n, 2^(m-1) + 2^(n-1) - 1 for odd n.
Cap:   2^m - 2^(m-n), attained by affine-image embeddings.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from vbflab import SearchConfig, lower_bound, search, upper_bound


def run_one(n, m, target, budget, seed) -> int:
    cfg = SearchConfig(
        n=n, m=m, budget=budget, seed=seed, target=target, max_hits=4
    )
    hits = search(cfg)
    lo, hi = lower_bound(n, m), upper_bound(n, m)
    print(
        f"{n}->{m} target={target}: {len(hits)} hit(s) "
        f"in budget {budget} (floor {lo}, cap {hi})"
    )
    for h in hits:
        src = "constructed" if h.candidate < 0 else f"candidate {h.candidate}"
        unbal = [
            c for c in h.report.components if c.lam and "balanced" not in c.tags
        ]
        shapes = sorted({t for c in unbal for t in c.tags if "bent" in t})
        print(
            f"  {src}: |B|={h.report.balanced_count} "
            f"|C|={h.report.constant_count} "
            f"unbalanced shapes={shapes} table={list(h.function.table)}"
        )
    return 0 if hits else 3


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--budget", type=int, default=20000)
    args = ap.parse_args()
    status = 0
    status |= run_one(3, 4, "meets-lower-bound", args.budget, args.seed)
    status |= run_one(4, 5, "meets-lower-bound", 25 * args.budget, args.seed)
    status |= run_one(3, 4, "meets-upper-bound", 1, args.seed)
    return status


if __name__ == "__main__":
    sys.exit(main())
