"""Probing the open duality statement at rank 4.

For unramified index-2 stages the duality between the two Prym-type
lattices is a theorem; for ramified ones at rank 4 and beyond it is open.
The probe draws random simple data, computes the Prym-Tyurin type exactly,
and tallies agreement with the conjectured chain. Agreement is evidence,
not proof, and the report says so.
"""

from prymlab.prym import conjecture_probe, conjectured_type

print("conjectured chain for rank 4, counts (4, 8):", conjectured_type(4, 4, 8))
print("conjectured chain for rank 4, counts (2, 8):", conjectured_type(4, 2, 8))
print()

report = conjecture_probe(4, 4, 8, trials=5, seed=99)
print(f"rank {report.n}, counts ({report.branch_short}, {report.branch_long}), "
      f"{report.trials} trials, seed {report.seed}")
for t, row in enumerate(report.rows):
    print(
        f"  trial {t}: computed {tuple(row['computed_type'])} "
        f"vs conjectured {tuple(row['conjectured_type'])} "
        f"agree={row['agree']} onto={row['mu_surjective']} scaling={row['scaling']}"
    )
print("agreement:", report.agreement)
print(report.note)
print()

# the unramified regime is settled, so there the probe asserts
settled = conjecture_probe(4, 0, 12, trials=3, seed=99)
print("unramified control:", settled.agreement, "-", settled.note)
