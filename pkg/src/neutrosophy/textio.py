"""Text literals for hyperreals, subsets and triples.

Grammar (whitespace is allowed between tokens, not inside an endpoint)::

    triple   := "(" subset ";" subset ";" subset ")"
    subset   := term ("U" term)*  |  "[" term ("," term)* "]"
    term     := "[" endpoint "," endpoint "]"  |  "{" endpoint ("," endpoint)* "}"
    endpoint := number [sign [number "e"]]
    number   := digits ["." digits]  |  digits "/" digits
    sign     := "+" | "-"

``1+`` is 1 + eps and ``0-`` is 0 - eps; a coefficient other than one is
written explicitly, e.g. ``1/2+3e`` or ``0-3e``.  The typographic forms
``1⁺``, ``⁻0`` and ``∪`` are accepted on input.  Output always uses exact
rationals, so :func:`format_triple` and :func:`parse_triple` round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    ComponentError,
    EmptySubset,
    InvalidInterval,
    LiteralSyntaxError,
    NeutrosophyError,
    OutOfRange,
)
from .hyperreal import Hyperreal, format_hyperreal, in_unit_range
from .intervals import NSInterval, NSSubset, ns_normalize
from .taxonomy import NeutroTriple

_PLUS = "+⁺"
_MINUS = "-⁻"
_UNION = "U∪"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def peek_past_ws(self) -> str:
        self.skip_ws()
        return self.peek()

    def fail(self, message: str, offset: int | None = None):
        raise LiteralSyntaxError(message, self.pos if offset is None else offset)

    def expect(self, ch: str) -> None:
        if self.peek_past_ws() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek_past_ws() == ""

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if self.pos == start:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected a digit, found {found}")
        return self.text[start:self.pos]

    def number(self) -> Fraction:
        whole = self.digits()
        if self.peek() == ".":
            self.pos += 1
            return Fraction(f"{whole}.{self.digits()}")
        if self.peek() == "/":
            self.pos += 1
            denom_at = self.pos
            denom = self.digits()
            if int(denom) == 0:
                self.fail("zero denominator", denom_at)
            return Fraction(int(whole), int(denom))
        return Fraction(int(whole))

    def endpoint(self, check_range: bool = True) -> Hyperreal:
        self.skip_ws()
        start = self.pos
        prefix_minus = False
        if self.peek() == "⁻":
            prefix_minus = True
            self.pos += 1
        std = self.number()
        eps = Fraction(0)
        ch = self.peek()
        if ch and ch in _PLUS + _MINUS:
            if prefix_minus:
                self.fail("infinitesimal sign given twice")
            self.pos += 1
            sign = 1 if ch in _PLUS else -1
            coeff = Fraction(1)
            if self.peek().isdigit():
                coeff = self.number()
                if self.peek() not in ("e", "ε"):
                    self.fail("expected 'e' after the infinitesimal coefficient")
                self.pos += 1
            eps = sign * coeff
        elif prefix_minus:
            eps = Fraction(-1)
        value = Hyperreal(std, eps)
        if check_range and not in_unit_range(value):
            raise OutOfRange(f"{format_hyperreal(value)} outside [0-, 1+]", start)
        return value

    def term(self) -> list[NSInterval]:
        ch = self.peek_past_ws()
        start = self.pos
        if ch == "[":
            self.pos += 1
            lo = self.endpoint()
            self.expect(",")
            hi = self.endpoint()
            self.expect("]")
            try:
                return [NSInterval(lo, hi)]
            except InvalidInterval as exc:
                raise LiteralSyntaxError(str(exc), start) from None
        if ch == "{":
            self.pos += 1
            if self.peek_past_ws() == "}":
                raise EmptySubset("empty set '{}' is not a valid subset", start)
            points = [self.endpoint()]
            while self.peek_past_ws() == ",":
                self.pos += 1
                points.append(self.endpoint())
            self.expect("}")
            return [NSInterval(p, p) for p in points]
        if ch == "" or ch in ";)":
            raise EmptySubset("expected a subset, found nothing", self.pos)
        found = repr(ch)
        self.fail(f"expected '[' or '{{', found {found}")

    def subset(self) -> NSSubset:
        self.skip_ws()
        raw: list[NSInterval] = []
        if self.peek() == "[" and self._list_form():
            self.pos += 1
            raw.extend(self.term())
            while self.peek_past_ws() == ",":
                self.pos += 1
                raw.extend(self.term())
            self.expect("]")
        else:
            raw.extend(self.term())
            while self.peek_past_ws() and self.peek() in _UNION:
                self.pos += 1
                raw.extend(self.term())
        return ns_normalize(raw)

    def _list_form(self) -> bool:
        # "[[..], {..}]" lists terms; "[a, b]" is a single interval
        probe = self.pos + 1
        while probe < len(self.text) and self.text[probe].isspace():
            probe += 1
        return probe < len(self.text) and self.text[probe] in "[{"

    def triple(self) -> NeutroTriple:
        self.expect("(")
        parts = []
        for name, closer in (("T", ";"), ("I", ";"), ("F", ")")):
            start = self.pos
            try:
                parts.append(self.subset())
            except NeutrosophyError as exc:
                offset = getattr(exc, "offset", None)
                raise ComponentError(name, exc, start if offset is None else offset) from exc
            self.expect(closer)
        return NeutroTriple(*parts)


def _finish(sc: _Scanner, value):
    if not sc.at_end():
        sc.fail(f"unexpected trailing text {sc.text[sc.pos:]!r}")
    return value


def parse_hyperreal(text: str) -> Hyperreal:
    """Parse an endpoint-style literal without the unit-range check.

    Used for diagnostics such as ``n_sup``, which may reach ``3+3e``.
    """
    sc = _Scanner(text)
    return _finish(sc, sc.endpoint(check_range=False))


def parse_endpoint(text: str) -> Hyperreal:
    sc = _Scanner(text)
    return _finish(sc, sc.endpoint())


def parse_subset(text: str) -> NSSubset:
    sc = _Scanner(text)
    return _finish(sc, sc.subset())


def parse_triple(text: str) -> NeutroTriple:
    sc = _Scanner(text)
    return _finish(sc, sc.triple())


def format_endpoint(value: Hyperreal) -> str:
    return format_hyperreal(value)


def format_subset(s: NSSubset) -> str:
    return str(s)


def format_triple(t: NeutroTriple) -> str:
    return f"({format_subset(t.T)};{format_subset(t.I)};{format_subset(t.F)})"
