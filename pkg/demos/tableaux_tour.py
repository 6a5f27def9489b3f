"""
Tableaux in the transposed convention
=====================================

Shapes list column heights.  Boxes are filled column by column from the
bottom, so the reading word is just the concatenation of the columns.
"""

from slkcat import tableaux as tb

# Fill the shape (3,3,1) with 1..7 and look at the displayed rows.
T = tb.fill_tableau((3, 3, 1), range(1, 8))
print(T)
print("column strict:", tb.is_column_strict(T), " semistandard:", tb.is_semistandard(T))

# A filling that is column strict but fails the row condition.
T = tb.fill_tableau((3, 3, 2, 1), (3, 2, 1, 4, 3, 2, 2, 1, 3))
print()
print(T)
print("column strict:", tb.is_column_strict(T), " semistandard:", tb.is_semistandard(T))

# Semistandard tableaux with entries up to 4, listed by reading word.
ss = tb.enumerate_semistandard((3, 3, 1), 4)
print("\n#SSYT of shape (3,3,1) with entries <= 4:", len(ss))
print("first one:\n" + str(ss[0]))

# Robinson-Schensted decides standardness of a filling by its recording tableau.
d = (4, 3, 2, 1)
for lam in tb.partitions(4):
    bad = tb.recording_criterion(lam, d)
    print(f"shape {lam}: criterion fails on {len(bad)} permutations")
