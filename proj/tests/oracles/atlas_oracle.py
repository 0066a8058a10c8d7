"""Independent brute-force oracle over the networkx graph atlas (all graphs, n <= 7).

Prints apex-number class counts, regular k-apex trees, and float Randic maxima
for 2-apex trees; the C++ suites pin the printed values.
"""
import itertools
import math
import networkx as nx


def is_tree(g):
    return g.number_of_nodes() > 0 and nx.is_tree(g)


def apex_number(g):
    nodes = sorted(g.nodes())
    for k in range(len(nodes)):
        for x in itertools.combinations(nodes, k):
            h = g.copy()
            h.remove_nodes_from(x)
            if is_tree(h):
                return k, x
    raise AssertionError


def randic(g):
    return sum(1 / math.sqrt(g.degree(u) * g.degree(v)) for u, v in g.edges())


C = (1 / math.sqrt(3) - 1 / math.sqrt(2)) ** 2

counts = {}
regular = []
best = {}
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0 or not nx.is_connected(g):
        continue
    k, _ = apex_number(g)
    counts[(n, k)] = counts.get((n, k), 0) + 1
    degs = {d for _, d in g.degree()}
    if k >= 2 and len(degs) == 1:
        regular.append((n, k, degs.pop(), nx.to_graph6_bytes(g, header=False).strip().decode()))
    if k == 2:
        r = randic(g)
        cur = best.get(n)
        if cur is None or r > cur[0] + 1e-12:
            best[n] = (r, [g])
        elif abs(r - cur[0]) <= 1e-12:
            cur[1].append(g)

print("connected per n:", {n: sum(c for (m, _), c in counts.items() if m == n) for n in range(1, 8)})
print("apex counts:", sorted(counts.items()))
print("regular k>=2:", regular)
for n, (r, gs) in sorted(best.items()):
    print("n", n, "max R(2-apex)", repr(r), "bound", n / 2 - C, "maximizers", len(gs),
          [sorted(d for _, d in g.degree()) for g in gs])
print("K4 graph6", nx.to_graph6_bytes(nx.complete_graph(4), header=False))
print("K1 graph6", nx.to_graph6_bytes(nx.empty_graph(1), header=False))
print("P4 graph6", nx.to_graph6_bytes(nx.path_graph(4), header=False))
print("C6 graph6", nx.to_graph6_bytes(nx.cycle_graph(6), header=False))
print("Petersen graph6", nx.to_graph6_bytes(nx.petersen_graph(), header=False))
big = nx.path_graph(70)
print("P70 graph6 prefix", nx.to_graph6_bytes(big, header=False)[:12])
