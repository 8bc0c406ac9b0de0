"""Non-decreasing sequences of packing radii.

A sequence ``(s_1, ..., s_k)`` lists the radius carried by each color
slot: two vertices sharing slot ``i`` must be at distance greater than
``s_i``.  Values are immutable and freely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass


class SequenceError(ValueError):
    """Raised for malformed radius sequences."""


@dataclass(frozen=True)
class SSequence:
    """Validated non-decreasing sequence of positive integer radii."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise SequenceError("empty sequence")
        if any(t < 1 for t in terms):
            raise SequenceError(f"non-positive term in {terms}")
        if any(a > b for a, b in zip(terms, terms[1:])):
            raise SequenceError(f"sequence {terms} is not non-decreasing")
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def __str__(self):
        return ",".join(str(t) for t in self.terms)


def parse_sequence(text: str) -> SSequence:
    """Parse a comma-separated radius list such as ``"1,2,2,3"``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        terms = tuple(int(p) for p in parts if p != "")
    except ValueError as exc:
        raise SequenceError(f"bad radius sequence {text!r}") from exc
    if len(terms) != len(parts):
        raise SequenceError(f"bad radius sequence {text!r}")
    return SSequence(terms)


def prefix(s: SSequence, j: int) -> SSequence:
    """First ``j`` terms of a sequence."""
    if not 1 <= j <= len(s):
        raise SequenceError(f"prefix length {j} out of range for {s}")
    return SSequence(s.terms[:j])


def uniform(radius: int, count: int) -> SSequence:
    """The sequence repeating one radius, e.g. ``uniform(2, 6)``."""
    return SSequence((radius,) * count)


def packing_family(k: int) -> SSequence:
    """The sequence ``(1, 2, ..., k)``."""
    return SSequence(tuple(range(1, k + 1)))


def dominates(weaker: SSequence, stronger: SSequence) -> bool:
    """True when every coloring for ``stronger`` is one for ``weaker``.

    Holds when ``weaker`` has at least as many slots and each of its
    first ``len(stronger)`` radii is no larger than the corresponding
    radius of ``stronger``: any ``stronger``-colorable graph is then
    ``weaker``-colorable.
    """
    if len(weaker) < len(stronger):
        return False
    return all(w <= s for w, s in zip(weaker.terms, stronger.terms))
