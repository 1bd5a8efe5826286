#!/usr/bin/env python3
"""Write every connected graph on 1..7 vertices (up to isomorphism) as graph6.

The graph atlas shipped with networkx enumerates all 1253 graphs on at most
seven vertices; the connected ones form the exhaustive small-graph corpus
used by the cross-check tests.
"""
import sys

import networkx as nx


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto7.g6"
    lines = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        g = nx.convert_node_labels_to_integers(g)
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
