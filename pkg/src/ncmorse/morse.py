"""Morse functions on chain lattices, in the modified sense: each chain
tolerates at most one non-increasing cofacet and at most one
non-decreasing facet. Critical chains come in two inequality
conventions; matchings pair covers whose values fail to ascend.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complexes import ChainLattice
from .errors import InvalidInputError, InvalidMorseError

CONVENTION_PAPER = "paper-nonstrict"
CONVENTION_FORMAN = "forman-strict"

_CONVENTION_ALIASES = {
    "paper": CONVENTION_PAPER,
    "paper-nonstrict": CONVENTION_PAPER,
    "forman": CONVENTION_FORMAN,
    "forman-strict": CONVENTION_FORMAN,
}


def normalize_convention(name: str) -> str:
    try:
        return _CONVENTION_ALIASES[name]
    except (KeyError, TypeError):
        choices = ", ".join(sorted(set(_CONVENTION_ALIASES)))
        raise InvalidInputError(f"unknown convention {name!r}; expected one of: {choices}") from None


def _to_fraction(chain_id: str, v) -> Fraction:
    # exact rationals only: ties must be genuine, not float artifacts
    if isinstance(v, bool):
        raise InvalidInputError(f"chain {chain_id!r}: value must be an exact rational")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"chain {chain_id!r}: cannot parse rational {v!r}") from None
    raise InvalidInputError(
        f"chain {chain_id!r}: value must be an exact rational, got {type(v).__name__}"
    )


@dataclass(frozen=True, eq=False)
class MorseFunction:
    values: Mapping[str, Fraction]

    def __post_init__(self):
        parsed = {}
        for k, v in dict(self.values).items():
            if not isinstance(k, str):
                raise InvalidInputError(f"chain ids must be strings, got {k!r}")
            parsed[k] = _to_fraction(k, v)
        object.__setattr__(self, "values", parsed)

    def value(self, chain_id: str) -> Fraction:
        try:
            return self.values[chain_id]
        except KeyError:
            raise InvalidInputError(f"morse function has no value for chain {chain_id!r}") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, MorseFunction) and self.values == other.values


def morse_from_dict(doc: Mapping) -> MorseFunction:
    """Parse {"values": {"W_v0": "0", "W_e0": "3/2"}}."""
    if not isinstance(doc, Mapping):
        raise InvalidInputError("morse function document must be an object")
    try:
        values = doc["values"]
    except KeyError:
        raise InvalidInputError("morse function document missing field 'values'") from None
    if not isinstance(values, Mapping):
        raise InvalidInputError("field 'values' must be an object")
    return MorseFunction(values)


def morse_to_dict(f: MorseFunction) -> dict:
    return {"values": {k: str(v) for k, v in f.values.items()}}


def _require_total(lattice: ChainLattice, f: MorseFunction) -> None:
    missing = [ch.id for ch in lattice.chains if ch.id not in f.values]
    if missing:
        raise InvalidInputError("morse function missing values for: " + ", ".join(missing))


@dataclass(frozen=True)
class MorseViolation:
    chain: str
    kind: str  # "descending_cofacets" or "ascending_facets"
    neighbors: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"chain": self.chain, "kind": self.kind, "neighbors": list(self.neighbors)}


@dataclass(frozen=True)
class MorseCheckReport:
    valid: bool
    violations: tuple[MorseViolation, ...]
    # chains holding both kinds of exception at once; legal for the
    # validity check but rejected by matching construction
    double_exceptions: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "double_exceptions": list(self.double_exceptions),
        }


def is_modified_morse(lattice: ChainLattice, f: MorseFunction) -> MorseCheckReport:
    """Check that every chain has at most one cofacet with value <= its own
    and at most one facet with value >= its own.
    """
    _require_total(lattice, f)
    violations: list[MorseViolation] = []
    doubles: list[str] = []
    for ch in lattice.chains:
        fx = f.value(ch.id)
        descending = tuple(u for u in lattice.cofacets(ch.id) if f.value(u) <= fx)
        ascending = tuple(d for d in lattice.facets(ch.id) if f.value(d) >= fx)
        if len(descending) > 1:
            violations.append(MorseViolation(ch.id, "descending_cofacets", descending))
        if len(ascending) > 1:
            violations.append(MorseViolation(ch.id, "ascending_facets", ascending))
        if descending and ascending:
            doubles.append(ch.id)
    return MorseCheckReport(
        valid=not violations,
        violations=tuple(violations),
        double_exceptions=tuple(doubles),
    )


@dataclass(frozen=True)
class CriticalReport:
    critical: tuple[tuple[str, ...], ...]  # index k holds the order-k critical chain ids
    counts: tuple[int, ...]
    convention: str

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "critical": [list(ids) for ids in self.critical],
            "counts": list(self.counts),
        }


def critical_chains(
    lattice: ChainLattice, f: MorseFunction, convention: str = CONVENTION_PAPER
) -> CriticalReport:
    """List the chains whose cofacets all sit above them and facets all sit
    below them; the convention decides whether ties count as above/below.
    """
    convention = normalize_convention(convention)
    _require_total(lattice, f)
    strict = convention == CONVENTION_FORMAN
    per_order: list[list[str]] = [[] for _ in range(lattice.max_order + 1)]
    for ch in lattice.chains:
        fx = f.value(ch.id)
        if strict:
            up_ok = all(f.value(u) > fx for u in lattice.cofacets(ch.id))
            down_ok = all(f.value(d) < fx for d in lattice.facets(ch.id))
        else:
            up_ok = all(f.value(u) >= fx for u in lattice.cofacets(ch.id))
            down_ok = all(f.value(d) <= fx for d in lattice.facets(ch.id))
        if up_ok and down_ok:
            per_order[ch.order].append(ch.id)
    return CriticalReport(
        critical=tuple(tuple(ids) for ids in per_order),
        counts=tuple(len(ids) for ids in per_order),
        convention=convention,
    )


def is_acceptable(report: CriticalReport) -> bool:
    """True iff the occupied critical orders form an initial segment 0..K
    (vacuously true with no critical chains)."""
    occupied = [k for k, m in enumerate(report.counts) if m > 0]
    return occupied == list(range(len(occupied)))


@dataclass(frozen=True)
class MorseMatching:
    pairs: tuple[tuple[str, str], ...]  # (lower, upper) along Hasse covers
    unmatched: tuple[str, ...]

    def __post_init__(self):
        seen: set[str] = set()
        for lo, hi in self.pairs:
            if lo == hi:
                raise InvalidInputError(f"pair ({lo}, {hi}) repeats a chain")
            for x in (lo, hi):
                if x in seen:
                    raise InvalidInputError(f"chain {x!r} appears in more than one pair")
                seen.add(x)

    def partner(self, chain_id: str) -> str | None:
        for lo, hi in self.pairs:
            if chain_id == lo:
                return hi
            if chain_id == hi:
                return lo
        return None

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "unmatched": list(self.unmatched)}


def matching_from_pairs(lattice: ChainLattice, pairs) -> MorseMatching:
    """Build a matching from explicit (lower, upper) pairs; unmatched chains
    are everything left over."""
    pairs = tuple((lo, hi) for lo, hi in pairs)
    covers = set(lattice.hasse)
    for lo, hi in pairs:
        lattice.chain(lo)
        lattice.chain(hi)
        if (lo, hi) not in covers:
            raise InvalidInputError(f"pair ({lo}, {hi}) is not a Hasse cover")
    used = {x for p in pairs for x in p}
    unmatched = tuple(ch.id for ch in lattice.chains if ch.id not in used)
    return MorseMatching(pairs, unmatched)


def matching_from_function(lattice: ChainLattice, f: MorseFunction) -> MorseMatching:
    """Pair every Hasse cover whose value fails to ascend. For a function
    that passes the validity check with no double exceptions this is a
    partial matching and the unmatched chains are exactly the strict
    critical set.
    """
    report = is_modified_morse(lattice, f)
    if not report.valid:
        bad = ", ".join(v.chain for v in report.violations)
        raise InvalidMorseError(f"not a valid morse function; violations at: {bad}")
    if report.double_exceptions:
        bad = ", ".join(report.double_exceptions)
        raise InvalidMorseError(
            f"chains with both a descending cofacet and an ascending facet: {bad}"
        )
    pairs = [(lo, hi) for lo, hi in lattice.hasse if f.value(hi) <= f.value(lo)]
    booked: set[str] = set()
    for lo, hi in pairs:
        for x in (lo, hi):
            if x in booked:
                raise InvalidMorseError(f"induced pairing books chain {x!r} twice")
            booked.add(x)
    unmatched = tuple(ch.id for ch in lattice.chains if ch.id not in booked)
    return MorseMatching(tuple(pairs), unmatched)


def _modified_digraph(lattice: ChainLattice, matched: set[tuple[str, str]]) -> dict[str, list[str]]:
    # matched covers point up, every other cover points down
    adj: dict[str, list[str]] = {ch.id: [] for ch in lattice.chains}
    for lo, hi in lattice.hasse:
        if (lo, hi) in matched:
            adj[lo].append(hi)
        else:
            adj[hi].append(lo)
    return adj


def _has_cycle(adj: Mapping[str, list[str]]) -> bool:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {x: WHITE for x in adj}
    for start in adj:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(adj[start]))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    return True
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return False


def is_acyclic_matching(lattice: ChainLattice, matching: MorseMatching) -> bool:
    """True iff reversing the matched covers leaves the Hasse digraph
    acyclic (no alternating cycle of matched/unmatched covers)."""
    covers = set(lattice.hasse)
    matched: set[tuple[str, str]] = set()
    for lo, hi in matching.pairs:
        lattice.chain(lo)
        lattice.chain(hi)
        if (lo, hi) not in covers:
            raise InvalidInputError(f"pair ({lo}, {hi}) is not a Hasse cover")
        matched.add((lo, hi))
    return not _has_cycle(_modified_digraph(lattice, matched))


def generate_morse(lattice: ChainLattice, seed: int = 0) -> MorseFunction:
    """Produce a valid Morse function deterministically from a seed: grow a
    greedy acyclic matching over unit-weight covers, then number the chains
    along a linear extension that descends across matched covers and
    ascends across all others.
    """
    if len(lattice) == 0:
        raise InvalidInputError("cannot generate a morse function on an empty lattice")
    rng = random.Random(seed)

    # unit covers only: matched pairs must stay usable by the collapse
    # machinery, which divides by the cover incidence
    candidates = [e for e in lattice.hasse if lattice.cover_deg.get(e) in (1, -1)]
    rng.shuffle(candidates)
    matched: set[tuple[str, str]] = set()
    used: set[str] = set()
    for lo, hi in candidates:
        if lo in used or hi in used:
            continue
        matched.add((lo, hi))
        if _has_cycle(_modified_digraph(lattice, matched)):
            matched.discard((lo, hi))
        else:
            used.add(lo)
            used.add(hi)

    # reverse matched covers so a topological numbering makes them descend
    adj: dict[str, list[str]] = {ch.id: [] for ch in lattice.chains}
    indeg: dict[str, int] = {ch.id: 0 for ch in lattice.chains}
    for lo, hi in lattice.hasse:
        a, b = (hi, lo) if (lo, hi) in matched else (lo, hi)
        adj[a].append(b)
        indeg[b] += 1
    prio = {ch.id: (rng.random(), i) for i, ch in enumerate(lattice.chains)}
    heap = [(prio[x], x) for x in indeg if indeg[x] == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        _, x = heapq.heappop(heap)
        order.append(x)
        for y in adj[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, (prio[y], y))
    assert len(order) == len(lattice), "cover orientation graph must be acyclic"
    return MorseFunction({x: Fraction(i) for i, x in enumerate(order)})
