"""Collections of triples: sets over a universe, complement spaces, corpora.

Membership in the complement C(M) is read off the F component of each
element's own triple; no complement operator is involved.  Both "belongs"
tests look at the standard part of the infimum, so a purely infinitesimal
degree never creates a dialetheia.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .errors import InvalidLabel, UnknownElement
from .intervals import NSSubset, ns_inf
from .taxonomy import (
    RELATIONAL_LABELS,
    Label,
    LabelSet,
    NeutroTriple,
    classify,
    parse_label,
)


def _occurs(s: NSSubset) -> bool:
    return ns_inf(s).std > 0


@dataclass(frozen=True)
class SetModel:
    universe: tuple[str, ...]
    membership: Mapping[str, NeutroTriple]

    def __post_init__(self):
        universe = tuple(self.universe)
        if len(set(universe)) != len(universe):
            raise ValueError("universe elements must be unique")
        membership = dict(self.membership)
        if set(membership) != set(universe):
            missing = sorted(set(universe) - set(membership))
            extra = sorted(set(membership) - set(universe))
            raise ValueError(f"membership/universe mismatch: missing={missing} extra={extra}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "membership", MappingProxyType(membership))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, NeutroTriple]]) -> "SetModel":
        pairs = list(pairs)
        return cls(tuple(x for x, _ in pairs), dict(pairs))

    def triple(self, x: str) -> NeutroTriple:
        try:
            return self.membership[x]
        except KeyError:
            raise UnknownElement(x) from None

    def without(self, x: str) -> "SetModel":
        return SetModel.from_pairs((y, self.membership[y]) for y in self.universe if y != x)

    def __len__(self) -> int:
        return len(self.universe)


@dataclass(frozen=True)
class ComplementSpace:
    """Events paired with the triple of their complementary event."""

    pairs: tuple[tuple[str, NeutroTriple, NeutroTriple], ...]

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        ids = [p[0] for p in pairs]
        if len(set(ids)) != len(ids):
            raise ValueError("event identifiers must be unique")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Proposition:
    id: str
    triple: NeutroTriple
    text: Optional[str] = None


@dataclass(frozen=True)
class PropositionCorpus:
    items: tuple[Proposition, ...] = field(default_factory=tuple)

    def __post_init__(self):
        items = tuple(self.items)
        ids = [p.id for p in items]
        if len(set(ids)) != len(ids):
            raise ValueError("proposition identifiers must be unique")
        object.__setattr__(self, "items", items)

    def classify_all(self) -> dict[str, LabelSet]:
        return {p.id: classify_proposition(p) for p in self.items}


def belongs_to(m: SetModel, x: str) -> bool:
    return _occurs(m.triple(x).T)


def belongs_to_complement(m: SetModel, x: str) -> bool:
    return _occurs(m.triple(x).F)


def _overlaps(m: SetModel, x: str) -> bool:
    return belongs_to(m, x) and belongs_to_complement(m, x)


def is_dialetheist_set(m: SetModel) -> bool:
    return any(_overlaps(m, x) for x in m.universe)


def is_trivialist_set(m: SetModel) -> bool:
    # an empty universe is not a witness of trivialism
    return bool(m.universe) and all(_overlaps(m, x) for x in m.universe)


def lift_label(m: SetModel, label) -> bool:
    """True iff every element of ``m`` carries ``label``.

    The empty set counts as Nihilist and as nothing else.
    """
    if str(getattr(label, "value", label)) in RELATIONAL_LABELS:
        raise InvalidLabel(f"{label} is relational; use the dialetheist/trivialist checks")
    try:
        label = parse_label(label)
    except KeyError:
        raise InvalidLabel(f"unknown label {label!r}") from None
    if not m.universe:
        return label is Label.NIHILIST
    return all(label in classify(m.membership[x]) for x in m.universe)


def _pair_overlaps(event: NeutroTriple, co_event: NeutroTriple) -> bool:
    return _occurs(event.T) and _occurs(co_event.T)


def is_dialetheist_space(s: ComplementSpace) -> bool:
    return any(_pair_overlaps(ev, co) for _, ev, co in s.pairs)


def is_trivialist_space(s: ComplementSpace) -> bool:
    return bool(s.pairs) and all(_pair_overlaps(ev, co) for _, ev, co in s.pairs)


def classify_probability(t: NeutroTriple) -> LabelSet:
    return classify(t)


def classify_proposition(p) -> LabelSet:
    """Accepts a :class:`Proposition` or a bare triple."""
    return classify(p.triple if isinstance(p, Proposition) else p)
