"""Extension graphs: where clustering meets planarity.

A word's extension graph records which letters can appear on its left and
right simultaneously.  For clustering words the graphs of all factors can be
drawn with the left side sorted by the block order and the right side by the
alphabet, without edge crossings; a non-clustering multiset breaks this.

Run from the repository root after `pip install -e .`:

    python demos/extension_graphs.py
"""

from ietkit import (
    OrderedAlphabet,
    Permutation,
    classify,
    extension_graph,
    is_compatible,
    is_forest,
    is_tree,
    order_from_permutation,
    sample_from_multiset,
)

abc = OrderedAlphabet("abc")
ab = OrderedAlphabet("ab")


def show(sample, v, left_order, right_order):
    graph = extension_graph(sample, v)
    name = v or "ε"
    edges = sorted(graph.edges, key=lambda e: (left_order.index(e[0]), right_order.index(e[1])))
    flags = []
    flags.append("tree" if is_tree(graph) else ("forest" if is_forest(graph) else "cyclic"))
    flags.append("compatible" if is_compatible(graph, left_order, right_order) else "CROSSING")
    print(f"  G({name}): " + " ".join(f"({a},{b})" for a, b in edges) + f"   [{', '.join(flags)}]")


# Language of the orbits of the 7-point discrete exchange: {aac, ab, ab}.
# Left vertices sorted by the block order c < b < a, right by a < b < c.
seven = sample_from_multiset(["aac", "ab"], abc, 6)
left = order_from_permutation(Permutation.symmetric(3), abc)
print(f"7-point exchange language, left order {' < '.join(left)}:")
for v in ("", "a"):
    show(seven, v, left, abc.letters)

# The pair {ab, aab}: each member clusters, the union of their languages is
# not even ordered dendric; the graphs of ε, a, and aba witness it for every
# choice of orders.
print()
pair = sample_from_multiset(["ab", "aab"], ab, 7)
print("language of {ab, aab}:")
for v in ("", "a", "aba"):
    show(pair, v, ab.letters, ab.letters)

import itertools

verdicts = []
for left_order in itertools.permutations(ab.letters):
    report = classify(pair, left_order, ab.letters, 5)
    verdicts.append(report.ordered_dendric)
print("ordered dendric for some order pair:", any(verdicts))
