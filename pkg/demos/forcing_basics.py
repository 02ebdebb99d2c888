"""Watch the color-change rule run on a few small graphs.

A blue vertex with exactly one white neighbour turns that neighbour blue.
Starting from one end of a path the whole path fills in; starting from one
vertex of a 4-cycle nothing moves at all.
"""

from zforce import cycle, derived_coloring, is_failed, is_stalled, path, petersen

g = path(6)
final, chain = derived_coloring(g, [0])
print("P_6 from {0}:")
print(chain.format())
print(f"  {len(chain)} forces, all blue: {len(final) == g.order}\n")

# every blue vertex on C_4 sees two whites, so the set is stalled
g = cycle(4)
print("C_4 from {0}: stalled =", is_stalled(g, [0]), " failed =", is_failed(g, [0]))

# a stalled set can still be large
g = cycle(8)
s = [0, 2, 4, 6]
print("C_8 from even vertices: stalled =", is_stalled(g, s))

# a closed neighbourhood is not enough on the Petersen graph
g = petersen()
final, chain = derived_coloring(g, [0, 1, 4, 5])
print(f"\nPetersen from {{0,1,4,5}}: {len(chain)} forces, final size {len(final)}")
final, chain = derived_coloring(g, [0, 1, 2, 3, 5])
print(f"Petersen from {{0,1,2,3,5}}: {len(chain)} forces, final size {len(final)}")
