"""Writes every graph on at most seven vertices (one per isomorphism class) in graph6.

Source: the graph atlas shipped with networkx. Output is sorted by order, then
by graph6 text, so the file is stable across networkx versions.
"""
import sys

import networkx as nx


def main(path):
    lines = sorted(
        (g.number_of_nodes(), nx.to_graph6_bytes(g, header=False).decode().strip())
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() >= 1
    )
    with open(path, "w") as out:
        for _, text in lines:
            out.write(text + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "atlas7.g6")
