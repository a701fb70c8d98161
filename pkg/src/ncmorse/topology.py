"""Finite T0-spaces as posets of primitive ideals.

The specialization order `a <= b` is ideal inclusion; the hull-kernel
closure of a subset is then its up-set, and the closed sets are exactly
the absorbing ones (subsets stable under passing to larger ideals).
Everything here is finite and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidInputError


class FinitePoset:
    """A finite partial order over opaque string ids.

    Input pairs may be any generating relation (typically covers); the
    constructor takes the reflexive-transitive closure and rejects cycles.
    """

    def __init__(self, elements: Iterable[str], pairs: Iterable[tuple[str, str]] = ()):
        elements = tuple(elements)
        seen = set()
        for e in elements:
            if e in seen:
                raise InvalidInputError(f"duplicate element id: {e!r}")
            seen.add(e)
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}

        up = {e: {e} for e in elements}
        for a, b in pairs:
            if a not in seen:
                raise InvalidInputError(f"relation references unknown element: {a!r}")
            if b not in seen:
                raise InvalidInputError(f"relation references unknown element: {b!r}")
            up[a].add(b)
        # transitive closure by saturation; fine at the finite sizes used here
        changed = True
        while changed:
            changed = False
            for a in elements:
                extra = set()
                for b in up[a]:
                    extra |= up[b]
                if not extra <= up[a]:
                    up[a] |= extra
                    changed = True
        for a in elements:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise InvalidInputError(f"not antisymmetric: {a!r} <= {b!r} <= {a!r}")
        self._up = {a: frozenset(bs) for a, bs in up.items()}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: str) -> bool:
        return e in self._up

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self):
        return hash((self.elements, tuple(sorted((a, tuple(sorted(b))) for a, b in self._up.items()))))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self.elements)} elements, {sum(len(u) for u in self._up.values())} relations)"

    def _require(self, e: str) -> None:
        if e not in self._up:
            raise InvalidInputError(f"unknown element id: {e!r}")

    def leq(self, a: str, b: str) -> bool:
        self._require(a)
        self._require(b)
        return b in self._up[a]

    def up_set(self, e: str) -> "PosetSubset":
        """All elements above e; this is the point closure, always absorbing."""
        self._require(e)
        return PosetSubset(self, self._up[e])

    def down_set(self, e: str) -> "PosetSubset":
        """All elements below e; its complement is absorbing."""
        self._require(e)
        return PosetSubset(self, frozenset(x for x in self.elements if e in self._up[x]))

    def covers(self) -> tuple[tuple[str, str], ...]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if a == b or b not in self._up[a]:
                    continue
                if any(c != a and c != b and c in self._up[a] and b in self._up[c]
                       for c in self.elements):
                    continue
                out.append((a, b))
        return tuple(out)

    def sort_members(self, members: Iterable[str]) -> list[str]:
        return sorted(members, key=self._index.__getitem__)


@dataclass(frozen=True)
class PosetSubset:
    """A subset of a FinitePoset's elements."""

    poset: FinitePoset = field(repr=False)
    members: frozenset[str]

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if m not in self.poset:
                raise InvalidInputError(f"subset member not in poset: {m!r}")

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, PosetSubset):
            return self.members == other.members and self.poset == other.poset
        return NotImplemented

    def sorted(self) -> list[str]:
        return self.poset.sort_members(self.members)


def _coerce(poset: FinitePoset, x) -> frozenset[str]:
    if isinstance(x, PosetSubset):
        if x.poset is not poset and x.poset != poset:
            raise InvalidInputError("subset belongs to a different poset")
        return x.members
    members = frozenset(x)
    for m in members:
        if m not in poset:
            raise InvalidInputError(f"subset member not in poset: {m!r}")
    return members


def closure(poset: FinitePoset, x) -> PosetSubset:
    """Hull-kernel closure: every element above some member of x.

    On a finite specialization order the ideals containing an intersection
    of members are exactly the up-set, so this is a Kuratowski closure.
    """
    members = _coerce(poset, x)
    out = set()
    for m in members:
        out |= poset._up[m]
    return PosetSubset(poset, frozenset(out))


def is_absorbing(poset: FinitePoset, x) -> bool:
    """Whether x contains every element above each of its members.

    Checked against the defining condition (member <= other implies other
    in x) rather than by comparing with closure(), so the equivalence of
    the two is a testable theorem, not a tautology.
    """
    members = _coerce(poset, x)
    for m in members:
        for b in poset._up[m]:
            if b not in members:
                return False
    return True


def up_set(poset: FinitePoset, e: str) -> PosetSubset:
    return poset.up_set(e)


def down_set(poset: FinitePoset, e: str) -> PosetSubset:
    return poset.down_set(e)


def poset_from_dict(doc: Mapping) -> FinitePoset:
    """Build a poset from {"elements": [...], "covers": [[a, b], ...]}."""
    if not isinstance(doc, Mapping):
        raise InvalidInputError("poset document must be an object")
    try:
        elements = doc["elements"]
    except KeyError:
        raise InvalidInputError("poset document missing field 'elements'") from None
    covers = doc.get("covers", [])
    if not isinstance(elements, (list, tuple)) or not all(isinstance(e, str) for e in elements):
        raise InvalidInputError("field 'elements' must be a list of strings")
    pairs = []
    for entry in covers:
        if not (isinstance(entry, (list, tuple)) and len(entry) == 2
                and all(isinstance(v, str) for v in entry)):
            raise InvalidInputError(f"field 'covers' entries must be [lower, upper] pairs, got {entry!r}")
        pairs.append((entry[0], entry[1]))
    return FinitePoset(elements, pairs)


def poset_to_dict(poset: FinitePoset) -> dict:
    return {
        "elements": list(poset.elements),
        "covers": [list(c) for c in poset.covers()],
    }
