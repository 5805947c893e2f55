"""Bifix-free words, cross-bifix-free pairs and the stronger factor condition."""
from snomat.words import border_length, format_word
from snomat import (
    are_cross_bifix_free,
    are_strong_non_overlapping,
    search_word_codes,
    validate_variable_length_code,
    VariableLengthCode,
)

# a word is bifix-free when no proper prefix is also a suffix
for w in ["110", "1010", "11100100", "0110"]:
    print(w, "longest border:", border_length(w))

# cross-bifix-free only looks at the ends of the two words
print(are_cross_bifix_free("1100", "11100100"))   # True
# ...but 1100 occurs inside 11100100, so the pair is not strong
print(are_strong_non_overlapping("1100", "11100100"))  # False
print(are_strong_non_overlapping("1111000", "10100"))  # True
print(are_strong_non_overlapping("1111000", "10"))     # False

# small codes come from an exhaustive search
codes = search_word_codes(4, 3, 4, limit=3)
for c in codes:
    print(" ".join(format_word(w) for w in c.words))

# mixing lengths adds the factor test across lengths
mixed = VariableLengthCode.of(["110", "210", "310", "320", "22000", "23000", "33000"])
print(validate_variable_length_code(mixed).ok)
