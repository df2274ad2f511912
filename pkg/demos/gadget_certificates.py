"""Bounded Bob certificates for the small gadgets.

A certificate is a Bob strategy that forces a stuck vertex within d of his
own moves against every Alice reply. It is a proof for the position in
hand, far cheaper than a full solve.
"""

from gamechrom import ALICE, GameState, Ruleset, bob_wins_within, solve
from gamechrom import constructions as cs

print("two-hub position, 3-ECG, Alice to move:")
for site in (None, *cs.FIG3_SITES):
    s = GameState(cs.fig3_position(site), ALICE, Ruleset.ecg(3))
    depths = [d for d in range(4) if bob_wins_within(s, d)]
    print(f"  extra leaf at {site or '-':5}: Bob wins within {depths[0]} moves")

print("\nP5 and P4+ in the 2-ECG:")
for name, f in (("P5", cs.path(5)), ("P4+", cs.p4_plus())):
    print(f"  {name}: {solve(GameState.start(f, Ruleset.ecg(2))).value}")

print("\nmaximum-degree-3 pieces:")
for r in cs.certify_small_gadgets():
    print(f"  {r.name}: {r.status} ({r.message})")
tm = cs.t_max3()
print(f"  glued tree: {tm.n} vertices, max degree {tm.max_degree} (too big to solve here)")
