"""Immutable graphs, elementary queries, and checkers with witnesses.

Walks through the named base graphs, asks the four structural questions
(cubic? bipartite? planar? how connected?), and shows that every answer
comes with evidence that can be re-checked without trusting the checker.
"""

from lambdapack import (
    atlas,
    components,
    connectivity_at_least,
    degree_profile,
    edge_cut,
    from_dot,
    is_bipartite,
    to_dot,
    to_json,
)
from lambdapack.planarity import is_planar, verify_kuratowski, verify_rotation_system

print("=== the four named base graphs ===")
for name in ("K4", "K33", "Q", "S"):
    g = atlas(name)
    prof = degree_profile(g)
    print(f"{name:4s} n={g.n:2d} m={g.m:2d} degrees {prof.min_degree}..{prof.max_degree}")

q = atlas("Q")
print("\n=== queries on the cube ===")
print("neighbors of 000:", [q.labels[u] for u in q.neighbors(0)])
print("components:", len(components(q)))
print("cut around one face:", edge_cut(q, [0, 1, 2, 3]).size, "edges")

print("\n=== checkers return witnesses ===")
ok, coloring = is_bipartite(q)
print("bipartite:", ok, "- classes:",
      [q.labels[v] for v in range(q.n) if coloring[v] == 0],
      [q.labels[v] for v in range(q.n) if coloring[v] == 1])
assert all(coloring[u] != coloring[v] for u, v in q.edges)

rep = is_planar(q)
print("planar:", rep.planar, "- rotation re-verified:",
      verify_rotation_system(q, rep.rotation))

k33 = atlas("K33")
rep = is_planar(k33)
print("K33 planar:", rep.planar, "- obstruction shape:",
      verify_kuratowski(k33, rep.obstruction))

ok, _ = connectivity_at_least(q, 3)
print("cube 3-connected:", ok)

print("\n=== serialization round-trips ===")
text = to_dot(q)
print(text.splitlines()[0], "...", f"({len(text.splitlines())} lines)")
assert from_dot(text) == q
print("JSON bytes:", len(to_json(q)))
print("done.")
