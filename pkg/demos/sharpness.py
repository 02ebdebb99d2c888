"""Pinning F on graphs too big to search.

P_10 lex P_4 has 40 vertices, far past what exhaustive search can reach.
A failed set from the construction gives F >= |S|.  The structural bound
gives F <= n - 3 for a connected graph with no twin pair, and n - 2 when
twins exist.  When the two numbers meet, F is known exactly.
"""

from zforce import (
    corona,
    corona_construction,
    cycle,
    lexicographic_construction,
    lexicographic_product,
    path,
    thm27_upper_bound,
    verify_sharpness,
)

cases = [
    ("P_10 lex P_4", lexicographic_product(path(10), path(4)), lexicographic_construction(path(10), path(4))),
    ("C_3 lex C_4", lexicographic_product(cycle(3), cycle(4)), lexicographic_construction(cycle(3), cycle(4))),
    ("P_3 corona P_4", corona(path(3), path(4)), corona_construction(path(3), path(4))),
    ("C_4 corona C_3", corona(cycle(4), cycle(3)), corona_construction(cycle(4), cycle(3))),
]

for name, g, con in cases:
    bound, basis = thm27_upper_bound(g)
    res = verify_sharpness(g, con.set)
    print(f"{name:15} n={g.order:2}  |S|={len(con.set):2}  bound={bound:2}  ({basis})  -> {res.reason}")

# the witness inside the last copy of the inner graph was found by search on P_4 alone
print("\nlast copy of P_4 in the lexicographic set:", [v % 4 for v in cases[0][2].set if v >= 36])
