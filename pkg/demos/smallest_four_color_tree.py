"""Why T' needs four colors, and why nothing smaller than it does.

T' is a path of four degree-4 vertices, each topped up with leaves. Every
tree on at most 13 vertices is won by Alice with three colors, and T' has
14. Deleting any one leaf drops it back to three.
"""

import time

from gamechrom import GameState, Ruleset, classify, game_chromatic_number, solve
from gamechrom.constructions import t_prime

tp = t_prime()
print(f"T' has {tp.n} vertices, degrees {sorted(tp.degrees, reverse=True)}")

t0 = time.perf_counter()
verdict = solve(GameState.start(tp, Ruleset.standard(3)))
print(f"3 colors, Alice first: {verdict.value} ({time.perf_counter() - t0:.2f}s)")
print(f"classifier: {classify(tp)}")

print("\nremove one leaf at a time:")
for leaf in (v for v in tp.vertices if tp.degrees[v] == 1):
    (hub,) = tp.adj[leaf]
    sub, _ = tp.subforest([v for v in tp.vertices if v != leaf])
    print(f"  leaf {leaf:2d} (on spine vertex {hub}): chi_g = {game_chromatic_number(sub)}")
