"""Which forests can Alice color with just two colors?

The answer is decided by the longest path alone, plus a parity twist at
length 3. This script checks the rule against the solver on every forest
up to 8 vertices and then plays the two-color strategy on a few of them.
"""

from collections import Counter

from gamechrom import GameState, Ruleset, forests_of_order, game_chromatic_number, is_chi_g_2
from gamechrom.forest import longest_path_length
from gamechrom.strategies import alice_2color, verify_policy
from gamechrom.textformat import format_position

why = Counter()
for n in range(9):
    for f in forests_of_order(n):
        ok, clause = is_chi_g_2(f)
        assert ok == (game_chromatic_number(f) == 2)
        why[(ok, clause.split(" at ")[0])] += 1

for (ok, clause), count in sorted(why.items(), key=lambda kv: -kv[1]):
    print(f"{'yes' if ok else 'no ':3}  {count:4d}  {clause}")

print("\nthe strategy on forests whose longest path has length 3:")
for n in (5, 7):
    for f in forests_of_order(n):
        if is_chi_g_2(f)[0] and longest_path_length(f) == 3:
            wins = verify_policy(alice_2color, GameState.start(f, Ruleset.standard(2)))
            print(format_position(f, comment=f"alice_2color wins against every Bob reply: {wins}"))
