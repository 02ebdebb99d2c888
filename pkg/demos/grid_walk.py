"""The diagonal walk on a grid and what makes its output maximal.

White cells are drawn as '.', blue as '#'.  Every blue cell next to a white
one has two white neighbours, so nothing can be forced; adding any white
cell back breaks that and the grid fills in.
"""

import sys

from zforce import grid_construction, is_failed, is_maximal_failed

n, m = (int(a) for a in sys.argv[1:3]) if len(sys.argv) > 2 else (7, 4)
res = grid_construction(n, m)

for i in range(m):
    print(" ".join("#" if (j * m + i) in res.set else "." for j in range(n)))

print(f"\n|F| = {len(res.set)} (predicted {res.predicted_size})")
print("failed:", is_failed(res.graph, res.set))
print("maximal:", is_maximal_failed(res.graph, res.set))
