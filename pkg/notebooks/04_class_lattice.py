"""
The class lattice on a singleton grid
=====================================

Enumerate every triple of singletons drawn from a small endpoint grid and
record which classes always imply others and which never meet.
"""

# %%
from fractions import Fraction

from neutrosophy.corpus import lattice_report

report = lattice_report()
print(report.n_triples, "triples")
for a, b in report.implications():
    if str(b) != "Neutrosophic":
        print(f"{a} => {b}")

# %%
print("never together:")
for a, b in report.exclusions():
    print(f"  {a} / {b}")

# %%
# Dropping the infinitesimals removes the Tautological and Nihilist forms.
standard = lattice_report(eps_grid=(Fraction(0),))
print({str(k): v for k, v in standard.counts.items()})
