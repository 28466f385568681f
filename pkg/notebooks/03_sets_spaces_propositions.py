"""
Sets, probability spaces and propositions
=========================================

The same triples describe element membership, event probability and
proposition truth.  Dialetheism and trivialism are properties of a whole
collection: some or all members overlap their complement.
"""

# %%
from neutrosophy import (
    ComplementSpace,
    Proposition,
    PropositionCorpus,
    SetModel,
    display_name,
    is_dialetheist_set,
    is_dialetheist_space,
    is_trivialist_set,
    is_trivialist_space,
    lift_label,
    parse_triple,
)

m = SetModel.from_pairs([
    ("ship-of-theseus", parse_triple("({0.6};{0.1};{0.5})")),
    ("granite", parse_triple("({1};{0};{0})")),
])
print("dialetheist:", is_dialetheist_set(m), " trivialist:", is_trivialist_set(m))

# The empty set is nihilist, and neither dialetheist nor trivialist.
empty = SetModel((), {})
print(lift_label(empty, "Nihilist"), is_dialetheist_set(empty), is_trivialist_set(empty))

# %%
space = ComplementSpace((
    ("rain", parse_triple("({0.7};{0};{0.3})"), parse_triple("({0.4};{0};{0.6})")),
    ("sun", parse_triple("({1};{0};{0})"), parse_triple("({0};{0};{1})")),
))
print("dialetheist space:", is_dialetheist_space(space), " trivialist space:", is_trivialist_space(space))

# %%
corpus = PropositionCorpus((
    Proposition("liar", parse_triple("({1};{0.5};{1})"), "This sentence is false."),
    Proposition("identity", parse_triple("({1+};{0-};{0-})"), "Every thing is itself."),
))
for pid, labels in corpus.classify_all().items():
    print(pid, sorted(display_name(label, "proposition") for label in labels))
