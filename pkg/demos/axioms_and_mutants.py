"""
Checking the axioms, then breaking them
=======================================

Run every axiom and theorem on PG(3,2), flip one incidence and watch which
clauses notice.
"""

# %%
import numpy as np

from pointplane import (IncidenceStructure, check_all_axioms, check_all_theorems,
                        check_vy_axioms, generate_pg3, replay_axiom)

pg = generate_pg3(2)
suite = check_all_axioms(pg)
for report in suite:
    print(report.line())
print(suite.notes)

# %%
for report in check_all_theorems(pg) + check_vy_axioms(pg):
    print(report.line())

# %%
# One flipped cell is enough to break something. The witness is the
# lexicographically smallest failing tuple and can be replayed on its own.
matrix = pg.matrix.copy()
matrix[0, 0] = not matrix[0, 0]
mutant = IncidenceStructure(matrix)
broken = [r for r in check_all_axioms(mutant) if not r.passed]
for report in broken:
    print(report.line(), replay_axiom(mutant, report))

# %%
# Theorem checks refuse to run on a structure that fails the axioms unless forced.
for report in check_all_theorems(mutant, force=True):
    if not report.passed:
        print(report.line())

# %%
rng = np.random.default_rng(0)
noisy = IncidenceStructure(rng.random((6, 6)) < 0.6)
print(sorted(check_all_axioms(noisy).failed_groups()))
