# Odd holes are the simplest imperfect graphs. A perfect division always exists
# for them (drop one vertex into B), while a 2-division never does.

from perfdiv import cycle, find_division, is_divisible, is_perfect
from perfdiv.divisibility import division_through_vertex
from perfdiv.verify import check_mn2d_properties

for k in (5, 7, 9):
    C = cycle(k)
    v = is_perfect(C)
    print(f"C{k}: perfect={v.perfect} ({v.kind})")
    print("  perfect division:", find_division(C).to_dict())
    print("  2-division:", find_division(C, kind="two"))

# every vertex of C5 can be placed on the perfect side
C5 = cycle(5)
print([division_through_vertex(C5, v).to_dict()["A"] for v in range(5)])

# C5 and C7 are minimal non-2-divisible and meet the degree bound 2*omega - 2 exactly
for k in (5, 7):
    r = check_mn2d_properties(cycle(k))
    print(f"C{k}", r.passed, r.universe)

# bounded weights up to 3 on C7: 3^7 weight functions, all admit h-perfect divisions
print(is_divisible(cycle(7), "pwd", weight_bound=3).to_dict()["evidence"])
