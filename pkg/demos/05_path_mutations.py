"""Pushing a path of G_4 up to the uppermost one.

Local moves replace a low corner by a higher one.  Under the weak
inequalities each move never lowers the path weight, and whatever order the
moves are applied in, the path ends at the uppermost path.
"""

import random

from tropical_tp import build_canonical, gen_weights, normalize_path, uppermost_path
from tropical_tp.network import levels_to_path, path_to_levels, path_weight

W = gen_weights(4, "weak", seed=3)
net = build_canonical(W)
# from source 3 to target 2 (levels 0-based), dipping to the bottom level
p = levels_to_path([2, 2, 1, 0, 0, 1, 1, 1])
print("start levels:", path_to_levels(p), "weight", path_weight(net, p))

for order in ("leftmost first", "random"):
    q, trace = normalize_path(W, p, rng=random.Random(1) if order == "random" else None)
    print(f"\n{order}:")
    for m in trace:
        print(f"  {m.kind:<20} column {m.column} level {m.level}")
    print("  end levels:", path_to_levels(q), "weight", path_weight(net, q))
    print("  uppermost:", q == uppermost_path(4, p[0][1], p[-1][1]))
