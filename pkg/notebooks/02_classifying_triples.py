"""
Classifying (T, I, F) triples
=============================

Each of T, I and F is a finite union of closed intervals.  The class
predicates read the sums of infima and suprema and the exact shapes of
the components.
"""

# %%
from neutrosophy import classify, n_inf, n_sup, parse_triple
from neutrosophy.taxonomy import sorted_labels

examples = {
    "liar-like (1, I, 1)": "({1};{0.3};{1})",
    "totally true, partly false": "({1};{0};[0.2,0.4])",
    "true in all worlds": "({1+};{0-};{0-})",
    "false in all worlds": "({0-};{0-};{1+})",
    "incomplete information": "({0.2};{0.1};{0.3})",
    "conflicting sources": "({0.9};{0.3};{0.5})",
    "plain fuzzy membership": "({0.3};{0};{0.7})",
}

for name, literal in examples.items():
    t = parse_triple(literal)
    print(f"{name:28} n_inf={str(n_inf(t)):6} n_sup={str(n_sup(t)):6} {sorted_labels(classify(t))}")

# %%
# Infinitesimals count.  A sup-sum of exactly 1 is neither incomplete nor
# contradictory, but one extra eps of indeterminacy tips it over.
for literal in ("({0.5};{0.5};{0})", "({0.5};{0+};{0.5})", "({0.5};{0-};{0.5})"):
    t = parse_triple(literal)
    print(literal, n_sup(t), sorted_labels(classify(t)))

# %%
# ({1+};{0-};{0-}) sums to 1 - eps, so it is also Intuitionistic, while
# ({1+};{0};{0}) sums to 1 + eps and is also Paraconsistent.
for literal in ("({1+};{0-};{0-})", "({1+};{0};{0})"):
    print(literal, sorted_labels(classify(parse_triple(literal))))
