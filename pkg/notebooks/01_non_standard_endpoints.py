"""
Non-standard endpoints: 0-, 0+, 1 and 1+
=========================================

Endpoints are exact values ``a + b*eps``.  The standard part ``a`` is an
ordinary rational, and ``eps`` is a single positive infinitesimal.  They
compare lexicographically, so ``0-`` sits just below 0 and ``1+`` just
above 1, and every sum stays exact.
"""

# %%
from neutrosophy import MINUS_ZERO, ONE, ONE_PLUS, ZERO, ZERO_PLUS, hr, in_unit_range
from neutrosophy.textio import parse_endpoint, parse_hyperreal

for value in (MINUS_ZERO, ZERO, ZERO_PLUS, ONE, ONE_PLUS):
    print(f"{str(value):>3}  std={value.std}  eps={value.eps}")

print(MINUS_ZERO < ZERO < ZERO_PLUS < ONE < ONE_PLUS)

# %%
# Literals parse to exact rationals; 0.1 is really 1/10.
tenth = parse_endpoint("0.1")
total = hr(0)
for _ in range(10):
    total = total + tenth
print(total, total == ONE)

# %%
# The closed range [0-, 1+] admits 1+ but not 1 + 2*eps.
print(in_unit_range(ONE_PLUS), in_unit_range(parse_hyperreal("1+2e")))

# Three copies of 1+ give the ceiling of any sup-sum.
print(ONE_PLUS + ONE_PLUS + ONE_PLUS)
