"""The (T, I, F) triple and its per-triple class predicates.

One predicate engine serves set membership, event probability and
proposition truth values alike; only the display vocabulary differs
(see :func:`display_name`).

Comparisons against 1 use the full hyperreal order, so infinitesimals
matter: ``({1+};{0-};{0-})`` sums to ``1-`` and is Intuitionistic as well
as Tautological, while ``({1+};{0};{0})`` sums to ``1+`` and is also
Paraconsistent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import FrozenSet

from .hyperreal import ONE, ONE_PLUS, ZERO, Hyperreal, hr_sum
from .intervals import NSSubset, as_subset, ns_inf, ns_sup, ns_singleton


class Label(str, enum.Enum):
    NEUTROSOPHIC = "Neutrosophic"
    CLASSICAL = "Classical"
    FUZZY = "Fuzzy"
    INTUITIONISTIC = "Intuitionistic"
    PARACONSISTENT = "Paraconsistent"
    FAILLIBILIST = "Faillibilist"
    PARADOXIST = "Paradoxist"
    PSEUDO_PARADOXIST = "PseudoParadoxist"
    TAUTOLOGICAL = "Tautological"
    NIHILIST = "Nihilist"

    def __str__(self) -> str:
        return self.value


LabelSet = FrozenSet[Label]

# Relational classes: defined over whole collections, never per triple.
RELATIONAL_LABELS = ("Dialetheist", "Trivialist")

KINDS = ("element", "event", "proposition")
_SUFFIX = {"element": "set", "event": "probability", "proposition": "logic"}


@dataclass(frozen=True)
class NeutroTriple:
    T: NSSubset
    I: NSSubset
    F: NSSubset

    @classmethod
    def of(cls, t, i, f) -> "NeutroTriple":
        """Build from anything :func:`~neutrosophy.intervals.as_subset` accepts."""
        return cls(as_subset(t), as_subset(i), as_subset(f))

    def components(self) -> tuple[NSSubset, NSSubset, NSSubset]:
        return (self.T, self.I, self.F)

    def __str__(self) -> str:
        return f"({self.T};{self.I};{self.F})"


_SINGLE_ONE = ns_singleton(ONE)
_SINGLE_ZERO = ns_singleton(ZERO)
_SINGLE_ONE_PLUS = ns_singleton(ONE_PLUS)


def n_inf(t: NeutroTriple) -> Hyperreal:
    return hr_sum(ns_inf(c) for c in t.components())


def n_sup(t: NeutroTriple) -> Hyperreal:
    return hr_sum(ns_sup(c) for c in t.components())


def is_intuitionistic(t: NeutroTriple) -> bool:
    return n_sup(t) < ONE


def is_paraconsistent(t: NeutroTriple) -> bool:
    return n_sup(t) > ONE


def is_faillibilist(t: NeutroTriple) -> bool:
    return ns_inf(t.I) > ZERO


def is_paradoxist(t: NeutroTriple) -> bool:
    return t.T == _SINGLE_ONE and t.F == _SINGLE_ONE


def _partial(s: NSSubset) -> bool:
    # Lower bound on the standard part: an infinitesimal degree is not a
    # partial one, and without this 0- indeterminacy could cancel 0+ falsity
    # and break Pseudo-paradoxist => Paraconsistent.
    return ns_inf(s).std > 0 and ns_sup(s) < ONE


def is_pseudo_paradoxist(t: NeutroTriple) -> bool:
    return (t.T == _SINGLE_ONE and _partial(t.F)) or (t.F == _SINGLE_ONE and _partial(t.T))


def _near_zero(s: NSSubset) -> bool:
    # accepts both the 0 and the 0- spelling
    return s.is_singleton and s.inf.std == 0 and s.inf.eps <= 0


def is_tautological(t: NeutroTriple) -> bool:
    return t.T == _SINGLE_ONE_PLUS and _near_zero(t.I) and _near_zero(t.F)


def is_nihilist(t: NeutroTriple) -> bool:
    return t.F == _SINGLE_ONE_PLUS and _near_zero(t.T) and _near_zero(t.I)


def is_classical(t: NeutroTriple) -> bool:
    if t.I != _SINGLE_ZERO:
        return False
    return (t.T, t.F) in ((_SINGLE_ONE, _SINGLE_ZERO), (_SINGLE_ZERO, _SINGLE_ONE))


def is_fuzzy(t: NeutroTriple) -> bool:
    if not all(c.is_singleton and c.inf.eps == 0 for c in t.components()):
        return False
    return t.I == _SINGLE_ZERO and t.T.inf.std + t.F.inf.std == 1


PREDICATES = {
    Label.CLASSICAL: is_classical,
    Label.FUZZY: is_fuzzy,
    Label.INTUITIONISTIC: is_intuitionistic,
    Label.PARACONSISTENT: is_paraconsistent,
    Label.FAILLIBILIST: is_faillibilist,
    Label.PARADOXIST: is_paradoxist,
    Label.PSEUDO_PARADOXIST: is_pseudo_paradoxist,
    Label.TAUTOLOGICAL: is_tautological,
    Label.NIHILIST: is_nihilist,
}


def classify(t: NeutroTriple) -> LabelSet:
    labels = {Label.NEUTROSOPHIC}
    labels.update(label for label, pred in PREDICATES.items() if pred(t))
    return frozenset(labels)


def sorted_labels(labels) -> list[str]:
    return sorted(str(label) for label in labels)


def parse_label(name) -> Label:
    """Look a label up by its value (``"PseudoParadoxist"``), case-insensitively."""
    if isinstance(name, Label):
        return name
    key = str(name).replace("-", "").replace("_", "").lower()
    for label in Label:
        if label.value.lower() == key:
            return label
    raise KeyError(name)


def display_name(label, kind: str = "element") -> str:
    """``display_name(Label.PARADOXIST, "event")`` -> ``"Paradoxist probability"``."""
    if kind not in _SUFFIX:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    name = label.value if isinstance(label, Label) else str(label)
    if name == "PseudoParadoxist":
        name = "Pseudo-Paradoxist"
    return f"{name} {_SUFFIX[kind]}"
