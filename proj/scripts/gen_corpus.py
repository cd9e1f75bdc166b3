#!/usr/bin/env python3
"""Generate the graph6 test corpus with networkx as the reference encoder.

Writes two parallel files under tests/data/:
  corpus.g6    -- one graph6 line per graph (networkx encoding)
  corpus.edges -- matching lines "n;u,v u,v ..." with the exact labeling

The C++ tests rebuild each graph from its edge line and require the
library's encoder to reproduce the networkx bytes exactly, then round-trip
them. Regenerating is deterministic (fixed seed)."""

import random
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "data"


def petersen_edges():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return edges


def k6_minus_pm_edges():
    return [(u, v) for u in range(6) for v in range(u + 1, 6)
            if (u, v) not in {(0, 1), (2, 3), (4, 5)}]


def named_graphs():
    yield 3, [(0, 1), (0, 2), (1, 2)]          # triangle
    yield 2, []                                # two isolated vertices
    yield 2, [(0, 1)]                          # single edge
    yield 0, []
    yield 1, []
    yield 10, petersen_edges()
    yield 6, k6_minus_pm_edges()
    yield 5, [(i, (i + 1) % 5) for i in range(5)]   # C_5
    yield 4, [(0, 1), (1, 2), (2, 3)]               # P_4
    yield 9, [(u, v) for u in range(9) for v in range(u + 1, 9)
              if u // 3 != v // 3]                  # Turan T(9,3)
    yield 5, [(0, i) for i in range(1, 5)]          # star on 5 vertices
    yield 62, [(i, (i + 1) % 62) for i in range(62)]  # C_62: size ceiling


def random_graphs(rng):
    for n in range(1, 13):
        for _ in range(30):
            p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.85])
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p]
            yield n, edges


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20260815)
    graphs = list(named_graphs()) + list(random_graphs(rng))

    g6_lines = []
    edge_lines = []
    for n, edges in graphs:
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        line = nx.to_graph6_bytes(g, header=False).decode().strip()
        g6_lines.append(line)
        edge_lines.append(f"{n};" + " ".join(f"{u},{v}" for u, v in sorted(edges)))

    (OUT / "corpus.g6").write_text("\n".join(g6_lines) + "\n")
    (OUT / "corpus.edges").write_text("\n".join(edge_lines) + "\n")
    print(f"wrote {len(graphs)} graphs")
    for name, idx in [("K_3", 0), ("2K_1", 1), ("K_2", 2), ("petersen", 5),
                      ("k6_minus_pm", 6)]:
        print(f"  {name}: {g6_lines[idx]}")


if __name__ == "__main__":
    main()
