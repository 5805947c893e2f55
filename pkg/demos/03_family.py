"""Build a non-overlapping matrix family from a variable-length code."""
from snomat import FamilyParams, VariableLengthCode, build_family, cardinality, verify_strong_non_overlap
from snomat.io import format_matrices

code = VariableLengthCode.of(["110", "210", "310", "320", "22000", "23000", "33000"])
params = FamilyParams(max_rows=4, max_cols=5, code=code)

family = build_family(params)
print(len(family), "matrices, closed form says", cardinality(params))
print(format_matrices(family.matrices))

report = verify_strong_non_overlap(family)
print("pairwise checks:", report.checked, "ok:", report.ok)

# the count grows geometrically in the number of rows
for m in range(2, 8):
    print(m, cardinality(FamilyParams(m, 5, code)))
