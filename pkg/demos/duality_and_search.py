"""
Duality, documents and independence witnesses
=============================================
"""

# %%
from pointplane import (SearchConfig, check_duality, dualize, generate_pg3,
                        parse_structure, search_independence, serialize_structure)

pg = generate_pg3(2)
flipped = dualize(pg)
print(flipped.shape, dualize(flipped) == pg)
print(check_duality(pg))

# %%
# The text format is a header and one 0/1 row per point.
doc = serialize_structure(pg)
print(doc[:60])
assert serialize_structure(parse_structure(doc)) == doc

# %%
# Small structures that satisfy every axiom group except one.
for drop, bounds in [(1, (3, 3)), (2, (4, 5))]:
    report = search_independence(SearchConfig(drop, *bounds, budget=100_000))
    print(report.to_text())
    if report.found is not None:
        print(serialize_structure(report.found))
