# Two perfect divisions on either side of a clique cutset rarely agree on the
# cutset. The refinement moves one disagreeing vertex at a time; on perfect
# (here chordal) graphs it always succeeds within |X| moves.

from perfdiv import Division, make_graph, members
from perfdiv.divisibility import cutset_split, find_p4_witness, refine_cutset_divisions, validate_division
from perfdiv.catalog import cycle

# two triangles glued on the edge {0, 1}, plus pendant paths
G = make_graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5), (5, 6)])
split = cutset_split(G, {0, 1})
print("X =", members(split.X), "V1 =", members(split.V1), "V2 =", members(split.V2))

d1 = Division(split.side1 & ~0b01, 0b01, "perfect")  # vertex 0 in B on side 1
d2 = Division(split.side2 & ~0b10, 0b10, "perfect")  # vertex 1 in B on side 2
print("side 1:", d1.to_dict(), validate_division(G, d1, split.side1))
print("side 2:", d2.to_dict(), validate_division(G, d2, split.side2))

out = refine_cutset_divisions(G, split, d1, d2)
print("merged:", out.merged, "iterations:", out.iterations, "mismatch per step:", out.measures)
print("division of G:", out.division.to_dict(), validate_division(G, out.division))

# when adding x to the perfect side creates an odd hole, an induced P4 starting
# inside the cutset explains why
z, path = find_p4_witness(cycle(7), {0, 2, 3, 4, 5, 6}, {0, 1}, 1)
print("P4 witness from", z, ":", path)
