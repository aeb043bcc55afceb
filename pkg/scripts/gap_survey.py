"""How tight is the replacement-cost lower bound in practice?

For random connected graphs, impose random sets of nontree edges and compare
the lower bound against the exact constrained optimum. Prints one row per |I|.

    python scripts/gap_survey.py --nodes 30 --edges 90 --graphs 200 --seed 0
"""

import argparse
import random
import statistics

from imposedmst.bound import lower_bound
from imposedmst.errors import InfeasibleError
from imposedmst.generate import random_connected_graph
from imposedmst.mst import minimum_spanning_tree


def survey(nodes, edges, graphs, max_imposed, seed):
    rng = random.Random(seed)
    rows = {k: [] for k in range(1, max_imposed + 1)}
    for _ in range(graphs):
        g = random_connected_graph(rng, nodes, edges)
        pool = minimum_spanning_tree(g).nontree_edges()
        for k in rows:
            if k > len(pool):
                continue
            imposed = set(rng.sample(pool, k))
            try:
                report = lower_bound(g, imposed)
            except InfeasibleError:
                continue
            increase = report.exact_cost - report.base_cost
            rows[k].append((report.gap, increase))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--nodes", type=int, default=30)
    parser.add_argument("--edges", type=int, default=90)
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--max-imposed", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rows = survey(args.nodes, args.edges, args.graphs, args.max_imposed, args.seed)
    print(f"{'|I|':>4} {'samples':>8} {'exact%':>7} {'mean gap':>9} {'bound/increase':>15}")
    for k, data in rows.items():
        if not data:
            continue
        gaps = [gap for gap, _ in data]
        captured = [
            (inc - gap) / inc for gap, inc in data if inc > 0
        ]
        ratio = f"{statistics.mean(captured):.3f}" if captured else "-"
        print(
            f"{k:>4} {len(data):>8} {100 * gaps.count(0) / len(data):>6.1f}% "
            f"{statistics.mean(gaps):>9.2f} {ratio:>15}"
        )


if __name__ == "__main__":
    main()
