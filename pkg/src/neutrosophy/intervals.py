"""Finite unions of closed intervals inside [0-, 1+]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyInput, InvalidInterval, OutOfRange
from .hyperreal import Hyperreal, format_hyperreal, in_unit_range


@dataclass(frozen=True)
class NSInterval:
    lo: Hyperreal
    hi: Hyperreal

    def __post_init__(self):
        for end in (self.lo, self.hi):
            if not in_unit_range(end):
                raise OutOfRange(f"endpoint {format_hyperreal(end)} outside [0-, 1+]")
        if self.hi < self.lo:
            raise InvalidInterval(
                f"lower end {format_hyperreal(self.lo)} exceeds upper end {format_hyperreal(self.hi)}"
            )

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, p: Hyperreal) -> bool:
        return self.lo <= p <= self.hi

    def __str__(self) -> str:
        if self.is_point:
            return "{" + format_hyperreal(self.lo) + "}"
        return f"[{format_hyperreal(self.lo)},{format_hyperreal(self.hi)}]"


@dataclass(frozen=True)
class NSSubset:
    """Nonempty, sorted, pairwise disjoint and non-touching intervals.

    Build one with :func:`ns_normalize` or :func:`ns_singleton`; the
    constructor only checks that the intervals are already normalized.
    Two normalized subsets are equal as point sets exactly when they
    compare equal here.
    """

    intervals: tuple[NSInterval, ...]

    def __post_init__(self):
        ivs = tuple(self.intervals)
        object.__setattr__(self, "intervals", ivs)
        if not ivs:
            raise EmptyInput("a subset needs at least one interval")
        for prev, cur in zip(ivs, ivs[1:]):
            if cur.lo <= prev.hi:
                raise ValueError("intervals are not normalized; use ns_normalize")

    @property
    def inf(self) -> Hyperreal:
        return self.intervals[0].lo

    @property
    def sup(self) -> Hyperreal:
        return self.intervals[-1].hi

    @property
    def is_singleton(self) -> bool:
        return len(self.intervals) == 1 and self.intervals[0].is_point

    def __contains__(self, p: Hyperreal) -> bool:
        return ns_contains(self, p)

    def __iter__(self):
        return iter(self.intervals)

    def __str__(self) -> str:
        return " U ".join(str(iv) for iv in self.intervals)


def ns_normalize(raw: Iterable[NSInterval]) -> NSSubset:
    ordered = sorted(raw, key=lambda iv: (iv.lo, iv.hi))
    if not ordered:
        raise EmptyInput("cannot normalize an empty interval list")
    merged = [ordered[0]]
    for iv in ordered[1:]:
        last = merged[-1]
        if iv.lo <= last.hi:
            # overlapping or touching at an exactly equal endpoint
            if iv.hi > last.hi:
                merged[-1] = NSInterval(last.lo, iv.hi)
        else:
            merged.append(iv)
    return NSSubset(tuple(merged))


def ns_inf(s: NSSubset) -> Hyperreal:
    return s.intervals[0].lo


def ns_sup(s: NSSubset) -> Hyperreal:
    return s.intervals[-1].hi


def ns_contains(s: NSSubset, p: Hyperreal) -> bool:
    # intervals are few; a linear scan beats bisect bookkeeping here
    return any(iv.lo <= p <= iv.hi for iv in s.intervals)


def ns_singleton(p: Hyperreal) -> NSSubset:
    if not in_unit_range(p):
        raise OutOfRange(f"{format_hyperreal(p)} outside [0-, 1+]")
    return NSSubset((NSInterval(p, p),))


def ns_interval(lo: Hyperreal, hi: Hyperreal) -> NSSubset:
    return NSSubset((NSInterval(lo, hi),))


def ns_equals(a: NSSubset, b: NSSubset) -> bool:
    return a.intervals == b.intervals


def _as_point(value) -> Hyperreal:
    if isinstance(value, Hyperreal):
        return value
    if isinstance(value, (int, Fraction, str)):
        return Hyperreal(value)
    raise TypeError(f"cannot read {value!r} as a hyperreal endpoint")


def as_subset(value) -> NSSubset:
    """Coerce loose Python values into an :class:`NSSubset`.

    - an ``NSSubset`` is returned unchanged;
    - a ``Hyperreal``, int, ``Fraction`` or decimal string is a singleton;
    - a 2-tuple ``(lo, hi)`` is a closed interval;
    - a list is the union of its coerced items.

    >>> str(as_subset([("0.2", "0.4"), "0.7"]))
    '[1/5,2/5] U {7/10}'
    """
    if isinstance(value, NSSubset):
        return value
    if isinstance(value, list):
        raw: list[NSInterval] = []
        for item in value:
            raw.extend(as_subset(item).intervals)
        return ns_normalize(raw)
    if isinstance(value, tuple):
        if len(value) != 2:
            raise TypeError("an interval tuple needs exactly two endpoints")
        return ns_interval(_as_point(value[0]), _as_point(value[1]))
    return ns_singleton(_as_point(value))


def endpoints(s: NSSubset) -> Sequence[Hyperreal]:
    out: list[Hyperreal] = []
    for iv in s.intervals:
        out.append(iv.lo)
        if not iv.is_point:
            out.append(iv.hi)
    return out
