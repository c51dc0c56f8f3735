"""
Lines of PG(3,q) as pencils
===========================

Build the projective 3-space over a small prime field, then recover its lines
from incidence alone.
"""

# %%
from collections import Counter

from pointplane import all_lines, generate_pg3, lines_meet

pg = generate_pg3(3)
print(pg.shape)

# %%
# Every pair of distinct points spans one line. A line is stored twice over:
# the points it contains and the planes that contain it.
lines = all_lines(pg)
print(len(lines))
print(Counter(len(ln.points()) for ln in lines))
print(Counter(len(ln.planes()) for ln in lines))

# %%
first = lines[0]
kinds = Counter(lines_meet(pg, first, other).kind.value for other in lines)
print(kinds)  # through each of its 4 points pass 12 other lines
