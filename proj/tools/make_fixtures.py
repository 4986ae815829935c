#!/usr/bin/env python3
"""Regenerate the bundled sample networks under data/.

Produces two weighted edge lists covering one population observed over
two interaction channels: `meetings.csv` (physical meetings) and
`phonecalls.csv` (phone calls). The construction is deterministic and
pins the summary characteristics the test suite asserts:

  meetings:    101 nodes, 256 edges, max weight 10, 200 edges of weight 1,
               unweighted diameter 7, connected
  phonecalls:  100 nodes, 124 edges, max weight 8, 100 edges of weight 1,
               unweighted diameter 14, connected
  shared node labels between the two files: 47

Each network is a backbone path (which realises the diameter) with
clusters of contacts hanging off interior backbone nodes, plus
intra-cluster chords. Clusters attach to a single backbone node, so no
chord can shorten the backbone; anchor positions and attachment depths
are bounded so no pair exceeds the backbone distance.
"""

import random
import sys

import networkx as nx


def build_network(n_nodes, n_edges, diam, anchor_lo, anchor_hi, max_depth,
                  weight_counts, seed):
    rng = random.Random(seed)
    g = nx.Graph()
    g.add_nodes_from(range(n_nodes))
    for i in range(diam):
        g.add_edge(i, i + 1)

    anchors = list(range(anchor_lo, anchor_hi + 1))
    clusters = {a: [] for a in anchors}
    for v in range(diam + 1, n_nodes):
        clusters[rng.choice(anchors)].append(v)

    for a in anchors:
        depth1 = []
        for v in clusters[a]:
            if depth1 and max_depth >= 2 and rng.random() < 0.35:
                g.add_edge(v, rng.choice(depth1))
            else:
                g.add_edge(v, a)
                depth1.append(v)

    # intra-cluster chords up to the target edge count
    candidates = []
    for a in anchors:
        group = [a] + clusters[a]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if not g.has_edge(group[i], group[j]):
                    candidates.append((group[i], group[j]))
    rng.shuffle(candidates)
    need = n_edges - g.number_of_edges()
    assert 0 <= need <= len(candidates), (need, len(candidates))
    g.add_edges_from(candidates[:need])

    weights = [w for w, c in weight_counts.items() for _ in range(c)]
    assert len(weights) == g.number_of_edges()
    rng.shuffle(weights)
    for (u, v), w in zip(sorted(g.edges()), weights):
        g[u][v]["weight"] = w
    return g


def verify(name, g, n_nodes, n_edges, diam, max_w, mode_count):
    ws = [d["weight"] for _, _, d in g.edges(data=True)]
    checks = {
        "nodes": g.number_of_nodes() == n_nodes,
        "edges": g.number_of_edges() == n_edges,
        "connected": nx.is_connected(g),
        "diameter": nx.diameter(g) == diam,
        "max weight": max(ws) == max_w,
        "weight-1 count": ws.count(1) == mode_count,
    }
    for what, ok in checks.items():
        if not ok:
            sys.exit(f"{name}: check failed: {what}")
    print(f"{name}: nodes={n_nodes} edges={n_edges} diameter={diam} "
          f"max_w={max_w} mode_count={mode_count} ok")


def write_csv(path, g, label_of):
    rows = []
    for u, v, d in g.edges(data=True):
        a, b = sorted((label_of[u], label_of[v]))
        rows.append((a, b, d["weight"]))
    rows.sort()
    with open(path, "w") as f:
        f.write("source,target,weight\n")
        for a, b, w in rows:
            f.write(f"{a},{b},{w}\n")
    print(f"wrote {path} ({len(rows)} edges)")


def main():
    meetings = build_network(
        n_nodes=101, n_edges=256, diam=7, anchor_lo=1, anchor_hi=6,
        max_depth=1,
        weight_counts={1: 200, 2: 20, 3: 12, 4: 8, 5: 6, 6: 4, 7: 2, 8: 2,
                       9: 1, 10: 1},
        seed=20201,
    )
    phonecalls = build_network(
        n_nodes=100, n_edges=124, diam=14, anchor_lo=2, anchor_hi=12,
        max_depth=2,
        weight_counts={1: 100, 2: 8, 3: 6, 4: 4, 5: 2, 6: 2, 7: 1, 8: 1},
        seed=20202,
    )
    verify("meetings", meetings, 101, 256, 7, 10, 200)
    verify("phonecalls", phonecalls, 100, 124, 14, 8, 100)

    # label pools with exactly 47 people appearing in both networks
    rng = random.Random(4242)
    pool = [f"S{i:03d}" for i in range(1, 155)]
    meet_labels = rng.sample(pool, 101)
    common = rng.sample(meet_labels, 47)
    phone_labels = common + [s for s in pool if s not in meet_labels]
    assert len(phone_labels) == 100
    rng.shuffle(meet_labels)
    rng.shuffle(phone_labels)
    assert len(set(meet_labels) & set(phone_labels)) == 47

    out_dir = sys.argv[1] if len(sys.argv) > 1 else "data"
    write_csv(f"{out_dir}/meetings.csv", meetings, meet_labels)
    write_csv(f"{out_dir}/phonecalls.csv", phonecalls, phone_labels)


if __name__ == "__main__":
    main()
