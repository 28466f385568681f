"""Reading record files, classifying them, and exploring the class lattice.

Two input layouts are accepted:

* plain text, one triple literal per line (blank lines and ``#`` comments
  are skipped; records are named ``L<line number>``);
* a JSON array of objects ``{"id", "kind", "triple"}``.  Complement
  spaces use ``"event"`` and ``"co_event"`` literals instead of
  ``"triple"``, and propositions may carry a ``"text"`` field.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import CorpusError, NeutrosophyError
from .hyperreal import MINUS_ZERO_X3, THREE_PLUS, Hyperreal, format_hyperreal, in_unit_range
from .intervals import ns_singleton
from .models import ComplementSpace, Proposition, PropositionCorpus, SetModel
from .taxonomy import (
    KINDS,
    Label,
    LabelSet,
    NeutroTriple,
    classify,
    n_inf,
    n_sup,
    sorted_labels,
)
from .textio import format_triple, parse_triple


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str
    triple: NeutroTriple
    location: str
    co_triple: Optional[NeutroTriple] = None
    text: Optional[str] = None


@dataclass(frozen=True)
class ClassificationRecord:
    id: str
    kind: str
    triple: NeutroTriple
    labels: LabelSet
    n_inf: str
    n_sup: str

    @classmethod
    def from_entry(cls, entry: CorpusEntry) -> "ClassificationRecord":
        t = entry.triple
        return cls(
            id=entry.id,
            kind=entry.kind,
            triple=t,
            labels=classify(t),
            n_inf=format_hyperreal(n_inf(t)),
            n_sup=format_hyperreal(n_sup(t)),
        )

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "triple": format_triple(self.triple),
            "labels": sorted_labels(self.labels),
            "n_inf": self.n_inf,
            "n_sup": self.n_sup,
        }


def _read_lines(text: str, kind: str):
    entries, problems = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        loc = f"line {lineno}"
        try:
            triple = parse_triple(stripped)
        except NeutrosophyError as exc:
            problems.append((loc, str(exc)))
            continue
        entries.append(CorpusEntry(f"L{lineno}", kind, triple, loc))
    return entries, problems


def _parse_field(obj: dict, name: str) -> NeutroTriple:
    value = obj.get(name)
    if not isinstance(value, str):
        raise NeutrosophyError(f"field {name!r} must be a literal string")
    try:
        return parse_triple(value)
    except NeutrosophyError as exc:
        raise NeutrosophyError(f"{name}: {exc}") from exc


def _read_json(text: str, kind: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        return [], [(f"line {exc.lineno}", f"invalid JSON: {exc.msg}")]
    if not isinstance(data, list):
        return [], [("line 1", "top-level JSON value must be an array")]

    entries, problems = [], []
    seen: set[str] = set()
    for index, obj in enumerate(data, start=1):
        loc = f"record {index}"
        try:
            if not isinstance(obj, dict):
                raise NeutrosophyError("record must be a JSON object")
            rid = obj.get("id")
            if not isinstance(rid, str) or not rid:
                raise NeutrosophyError("missing string field 'id'")
            if rid in seen:
                raise NeutrosophyError(f"duplicate id {rid!r}")
            rkind = obj.get("kind", kind)
            if rkind not in KINDS:
                raise NeutrosophyError(f"kind must be one of {', '.join(KINDS)}")
            co = None
            if "event" in obj or "co_event" in obj:
                triple = _parse_field(obj, "event")
                co = _parse_field(obj, "co_event")
            else:
                triple = _parse_field(obj, "triple")
            text_field = obj.get("text")
        except NeutrosophyError as exc:
            problems.append((loc, str(exc)))
            continue
        seen.add(rid)
        entries.append(CorpusEntry(rid, rkind, triple, loc, co, text_field))
    return entries, problems


def read_corpus(source, kind: str = "element"):
    """Parse a record file.  Returns ``(entries, problems)``.

    ``source`` is a path; problems are ``(location, message)`` pairs and
    never abort the read.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    text = Path(source).read_text(encoding="utf-8")
    if text.lstrip().startswith("["):
        return _read_json(text, kind)
    return _read_lines(text, kind)


def classify_file(path, kind: str = "element") -> list[ClassificationRecord]:
    """Classify every record of ``path`` in input order.

    Raises :class:`CorpusError` listing the bad records if any failed; the
    records that did parse are attached to the exception.
    """
    entries, problems = read_corpus(path, kind)
    records = [ClassificationRecord.from_entry(e) for e in entries]
    if problems:
        raise CorpusError(problems, records)
    return records


def check_invariants(t: NeutroTriple) -> list[str]:
    """Return a description of every structural invariant ``t`` violates."""
    out = []
    lo, hi = n_inf(t), n_sup(t)
    if not (MINUS_ZERO_X3 <= lo <= hi <= THREE_PLUS):
        out.append(f"sum bound fails: n_inf={format_hyperreal(lo)} n_sup={format_hyperreal(hi)}")
    labels = classify(t)
    if Label.NEUTROSOPHIC not in labels:
        out.append("missing Neutrosophic label")
    for a, b in ((Label.INTUITIONISTIC, Label.PARACONSISTENT), (Label.TAUTOLOGICAL, Label.NIHILIST)):
        if a in labels and b in labels:
            out.append(f"{a} and {b} both hold")
    for a in (Label.PARADOXIST, Label.PSEUDO_PARADOXIST):
        if a in labels and Label.PARACONSISTENT not in labels:
            out.append(f"{a} without Paraconsistent")
    if parse_triple(format_triple(t)) != t:
        out.append("canonical text does not round-trip")
    return out


def validate_file(path, kind: str = "element"):
    """Returns ``(violations, problems)``, both lists of ``(location, message)``."""
    entries, problems = read_corpus(path, kind)
    violations = []
    for e in entries:
        for name, t in (("", e.triple), ("co_event: ", e.co_triple)):
            if t is None:
                continue
            violations.extend((e.location, f"{e.id}: {name}{msg}") for msg in check_invariants(t))
    return violations, problems


def build_model(entries: Sequence[CorpusEntry]):
    """A :class:`ComplementSpace` if the entries carry co-events, else a :class:`SetModel`."""
    with_co = [e for e in entries if e.co_triple is not None]
    if with_co:
        if len(with_co) != len(entries):
            raise NeutrosophyError("either every record has event/co_event or none does")
        return ComplementSpace(tuple((e.id, e.triple, e.co_triple) for e in entries))
    return SetModel.from_pairs((e.id, e.triple) for e in entries)


def build_corpus(entries: Iterable[CorpusEntry]) -> PropositionCorpus:
    return PropositionCorpus(tuple(Proposition(e.id, e.triple, e.text) for e in entries))


# -- class lattice over a grid of singleton triples ---------------------------

DEFAULT_STD_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
DEFAULT_EPS_GRID = (Fraction(-1), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class LatticeReport:
    n_triples: int
    counts: dict
    implies: dict
    together: dict
    witnesses: dict

    def implications(self) -> list[tuple[Label, Label]]:
        """Pairs ``(A, B)`` with A witnessed and every A-triple also B."""
        return [(a, b) for (a, b), ok in self.implies.items() if ok and self.counts[a]]

    def exclusions(self) -> list[tuple[Label, Label]]:
        """Unordered pairs never seen together, both individually witnessed."""
        out = []
        for (a, b), seen in self.together.items():
            if a.value < b.value and not seen and self.counts[a] and self.counts[b]:
                out.append((a, b))
        return out

    def to_json(self) -> dict:
        return {
            "n_triples": self.n_triples,
            "counts": {str(k): v for k, v in self.counts.items()},
            "implications": [[str(a), str(b)] for a, b in self.implications()],
            "exclusions": [[str(a), str(b)] for a, b in self.exclusions()],
            "witnesses": {
                f"{a}&{b}": format_triple(t) for (a, b), t in self.witnesses.items() if a.value < b.value
            },
        }


def grid_points(std_grid=DEFAULT_STD_GRID, eps_grid=DEFAULT_EPS_GRID) -> list[Hyperreal]:
    points = {Hyperreal(s, e) for s in std_grid for e in eps_grid}
    return sorted(p for p in points if in_unit_range(p))


def grid_triples(std_grid=DEFAULT_STD_GRID, eps_grid=DEFAULT_EPS_GRID):
    singles = [ns_singleton(p) for p in grid_points(std_grid, eps_grid)]
    for t, i, f in itertools.product(singles, repeat=3):
        yield NeutroTriple(t, i, f)


def lattice_report(std_grid=DEFAULT_STD_GRID, eps_grid=DEFAULT_EPS_GRID) -> LatticeReport:
    labels = list(Label)
    counts = dict.fromkeys(labels, 0)
    implies = {(a, b): True for a in labels for b in labels if a is not b}
    together = dict.fromkeys(implies, False)
    witnesses: dict = {}
    n = 0
    for t in grid_triples(std_grid, eps_grid):
        n += 1
        got = classify(t)
        for a in got:
            counts[a] += 1
        for a, b in implies:
            if a in got:
                if b in got:
                    if not together[a, b]:
                        together[a, b] = True
                        witnesses[a, b] = t
                else:
                    implies[a, b] = False
    return LatticeReport(n, counts, implies, together, witnesses)
