"""List a family group so that consecutive matrices differ in one row."""
from snomat import build_gm, verify_gray
from snomat.gray import deltas

words = ["210", "310", "110", "320"]   # inner words first, then top and bottom
listing = build_gm(words, 3)
for m in listing:
    print(" ".join("".join(map(str, r)) for r in m.entries))

# a listing can be stored as its first matrix plus row updates
print(list(deltas(listing)))
print(verify_gray(listing, words[:2], 3, top="110", bottom="320").ok)
