"""
Every finite topology comes from a generalized metric
=====================================================

Take the opens as an index set and let d(x, y) be infinite exactly on the
opens that contain x but not y.  The topology induced by that distance is
the one we started from.  This checks all 389 topologies on at most 4 points.
"""

import time

from quniform import Topology, enumerate_topologies, left_topology, realize, roundtrip_check
from quniform import from_continuity_space, symmetrized_realization_topology

sierpinski = Topology.from_sets(["a", "b"], [[], ["a"], ["a", "b"]])
print(realize(sierpinski).to_text())
print("induced:", left_topology(from_continuity_space(realize(sierpinski).space)))
print("after symmetrizing:", symmetrized_realization_topology(sierpinski))

start = time.perf_counter()
for n in range(1, 5):
    tops = enumerate_topologies(n)
    ok = sum(roundtrip_check(t) for t in tops)
    print(f"n={n}: {len(tops)} topologies, {ok} round trips succeed")
print(f"{time.perf_counter() - start:.2f}s")
