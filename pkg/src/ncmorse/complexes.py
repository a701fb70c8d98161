"""Finite CW complexes given by cells with signed boundary incidences,
and the chain lattice they induce: one chain per cell, ordered by
inclusion of face-closure supports, mirrored by an anti-isomorphic
family of ideal labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidComplexError, InvalidInputError
from .topology import FinitePoset


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    boundary: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvalidInputError(f"cell id must be a nonempty string, got {self.id!r}")
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 0:
            raise InvalidInputError(f"cell {self.id!r}: dim must be a non-negative integer")
        entries = []
        for entry in self.boundary:
            face, deg = entry
            if not isinstance(face, str):
                raise InvalidInputError(f"cell {self.id!r}: face id must be a string")
            if not isinstance(deg, int) or isinstance(deg, bool):
                raise InvalidInputError(f"cell {self.id!r}: incidence must be an integer")
            entries.append((face, deg))
        object.__setattr__(self, "boundary", tuple(entries))


class CellComplex:
    """An immutable cell complex; construction only requires indexability
    (unique ids, well-typed fields), everything else is validate_complex's job.
    """

    def __init__(self, cells: Iterable[Cell]):
        cells = tuple(cells)
        by_id: dict[str, Cell] = {}
        for c in cells:
            if not isinstance(c, Cell):
                c = Cell(*c)
            if c.id in by_id:
                raise InvalidInputError(f"duplicate cell id: {c.id!r}")
            by_id[c.id] = c
        self.cells = tuple(by_id.values())
        self._by_id = by_id

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell_id: str) -> bool:
        return cell_id in self._by_id

    def cell(self, cell_id: str) -> Cell:
        try:
            return self._by_id[cell_id]
        except KeyError:
            raise InvalidInputError(f"unknown cell id: {cell_id!r}") from None

    @property
    def dimension(self) -> int:
        """Max cell dimension; -1 for the empty complex."""
        return max((c.dim for c in self.cells), default=-1)

    def cells_of_dim(self, k: int) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells if c.dim == k)

    def cell_counts(self) -> tuple[int, ...]:
        """Cells per dimension 0..n."""
        n = self.dimension
        return tuple(len(self.cells_of_dim(k)) for k in range(n + 1))

    def skeleton(self, k: int) -> "CellComplex":
        return CellComplex(c for c in self.cells if c.dim <= k)

    @property
    def is_regular(self) -> bool:
        """All incidences are +-1 and no (cell, face) pair repeats."""
        for c in self.cells:
            faces = [f for f, _ in c.boundary]
            if len(faces) != len(set(faces)):
                return False
            if any(deg not in (1, -1) for _, deg in c.boundary):
                return False
        return True

    def faces(self, cell_id: str) -> tuple[str, ...]:
        """Distinct listed faces, in boundary order."""
        seen: dict[str, None] = {}
        for f, _ in self.cell(cell_id).boundary:
            seen.setdefault(f)
        return tuple(seen)

    def face_closure(self, cell_id: str) -> frozenset[str]:
        """The cell and all its iterated faces."""
        out: set[str] = set()
        stack = [cell_id]
        while stack:
            x = stack.pop()
            if x in out:
                continue
            out.add(x)
            stack.extend(f for f, _ in self.cell(x).boundary)
        return frozenset(out)

    def incidence(self, cell_id: str, face_id: str) -> int:
        """Summed incidence coefficient of face_id in cell_id's boundary."""
        return sum(deg for f, deg in self.cell(cell_id).boundary if f == face_id)


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...]
    regular: bool
    dimension: int
    cell_counts: tuple[int, ...]

    @property
    def valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "errors": list(self.errors),
            "regular": self.regular,
            "dimension": self.dimension,
            "cell_counts": list(self.cell_counts),
        }


def validate_complex(c: CellComplex) -> ValidationReport:
    """Report every violated complex invariant; an empty error list means valid.

    Non-regular incidence data is not an error, only a flag: the Morse
    collapse machinery rejects it later, where signs actually matter.
    """
    errors: list[str] = []
    referencable = True
    for cell in c.cells:
        for face, _deg in cell.boundary:
            if face not in c:
                errors.append(f"dangling face: {cell.id} -> {face}")
                referencable = False
            elif c.cell(face).dim != cell.dim - 1:
                errors.append(
                    f"wrong dimension: {cell.id} (dim {cell.dim}) lists face "
                    f"{face} (dim {c.cell(face).dim})"
                )
                referencable = False
    if referencable:
        # d(d(x)) must vanish: for each cell x and each codim-2 cell z,
        # sum over faces y of deg(x,y)*deg(y,z) is zero.
        for cell in c.cells:
            acc: dict[str, int] = {}
            for y, deg_xy in cell.boundary:
                for z, deg_yz in c.cell(y).boundary:
                    acc[z] = acc.get(z, 0) + deg_xy * deg_yz
            for z, total in acc.items():
                if total != 0:
                    errors.append(f"boundary of boundary not zero: {cell.id} -> {z} gives {total}")
    return ValidationReport(
        errors=tuple(errors),
        regular=c.is_regular,
        dimension=c.dimension,
        cell_counts=c.cell_counts(),
    )


def require_valid(c: CellComplex) -> None:
    report = validate_complex(c)
    if not report.valid:
        raise InvalidComplexError("invalid complex: " + "; ".join(report.errors))


@dataclass(frozen=True)
class ChainInfo:
    id: str
    order: int
    generator: str
    support: frozenset[str]

    def to_dict(self, complex_order: Sequence[str]) -> dict:
        index = {x: i for i, x in enumerate(complex_order)}
        return {
            "id": self.id,
            "order": self.order,
            "generator": self.generator,
            "support": sorted(self.support, key=index.__getitem__),
        }


def chain_id_for(cell_id: str) -> str:
    return f"W_{cell_id}"


def ideal_id_for(cell_id: str) -> str:
    return f"I_{cell_id}"


class ChainLattice:
    """One chain per cell of a complex: order = cell dimension, support =
    face closure of the generator, Hasse covers = listed codimension-1 faces.
    Ideal labels mirror the chains with the reversed order.
    """

    def __init__(self, chains: Sequence[ChainInfo], hasse: Sequence[tuple[str, str]],
                 cover_deg: Mapping[tuple[str, str], int], cell_order: Sequence[str]):
        self.chains = tuple(chains)
        self.hasse = tuple(hasse)
        self.cover_deg = dict(cover_deg)
        self.cell_order = tuple(cell_order)
        self._by_id = {ch.id: ch for ch in self.chains}
        self.ideal_of = {ch.id: ideal_id_for(ch.generator) for ch in self.chains}
        self._up: dict[str, list[str]] = {ch.id: [] for ch in self.chains}
        self._down: dict[str, list[str]] = {ch.id: [] for ch in self.chains}
        for lo, hi in self.hasse:
            self._up[lo].append(hi)
            self._down[hi].append(lo)

    def __len__(self) -> int:
        return len(self.chains)

    def __contains__(self, chain_id: str) -> bool:
        return chain_id in self._by_id

    def chain(self, chain_id: str) -> ChainInfo:
        try:
            return self._by_id[chain_id]
        except KeyError:
            raise InvalidInputError(f"unknown chain id: {chain_id!r}") from None

    def cofacets(self, chain_id: str) -> tuple[str, ...]:
        self.chain(chain_id)
        return tuple(self._up[chain_id])

    def facets(self, chain_id: str) -> tuple[str, ...]:
        self.chain(chain_id)
        return tuple(self._down[chain_id])

    def leq(self, a: str, b: str) -> bool:
        """Chain order: inclusion of supports."""
        return self.chain(a).support <= self.chain(b).support

    def ideal_contains(self, a: str, b: str) -> bool:
        """Whether ideal(a) contains ideal(b); anti-isomorphic to leq."""
        return self.chain(b).support >= self.chain(a).support

    @property
    def max_order(self) -> int:
        return max((ch.order for ch in self.chains), default=-1)

    def chains_of_order(self, k: int) -> tuple[ChainInfo, ...]:
        return tuple(ch for ch in self.chains if ch.order == k)

    def counts(self) -> tuple[int, ...]:
        """Chains per order 0..n; equals the cell counts of the source complex."""
        return tuple(len(self.chains_of_order(k)) for k in range(self.max_order + 1))

    def chain_poset(self) -> FinitePoset:
        return FinitePoset((ch.id for ch in self.chains), self.hasse)

    def ideal_poset(self) -> FinitePoset:
        """The mirror ideal labels under reversed order (bigger support,
        smaller ideal)."""
        pairs = [(self.ideal_of[hi], self.ideal_of[lo]) for lo, hi in self.hasse]
        return FinitePoset((self.ideal_of[ch.id] for ch in self.chains), pairs)

    def to_dict(self) -> dict:
        return {
            "chains": [ch.to_dict(self.cell_order) for ch in self.chains],
            "ideals": {ch.id: self.ideal_of[ch.id] for ch in self.chains},
            "hasse": [list(edge) for edge in self.hasse],
            "counts": list(self.counts()),
        }


def chain_lattice(c: CellComplex) -> ChainLattice:
    """Build the per-cell chain lattice of a valid complex."""
    require_valid(c)
    chains = [
        ChainInfo(
            id=chain_id_for(cell.id),
            order=cell.dim,
            generator=cell.id,
            support=c.face_closure(cell.id),
        )
        for cell in c.cells
    ]
    hasse: list[tuple[str, str]] = []
    cover_deg: dict[tuple[str, str], int] = {}
    for cell in c.cells:
        for face in c.faces(cell.id):
            edge = (chain_id_for(face), chain_id_for(cell.id))
            hasse.append(edge)
            cover_deg[edge] = c.incidence(cell.id, face)
    return ChainLattice(chains, hasse, cover_deg, [cell.id for cell in c.cells])


def ideal_meet(lattice: ChainLattice, ids: Iterable[str]) -> frozenset[str]:
    """Support of the meet of the chains' ideals: intersecting ideals
    unions their hulls, so the result is the union of supports."""
    ids = list(ids)
    if not ids:
        raise InvalidInputError("ideal_meet requires at least one chain id")
    out: set[str] = set()
    for chain_id in ids:
        out |= lattice.chain(chain_id).support
    return frozenset(out)


def complex_from_dict(doc: Mapping) -> CellComplex:
    """Build a complex from {"cells": [{"id", "dim", "boundary": [{"cell", "deg"}]}]}."""
    if not isinstance(doc, Mapping):
        raise InvalidInputError("complex document must be an object")
    try:
        cells = doc["cells"]
    except KeyError:
        raise InvalidInputError("complex document missing field 'cells'") from None
    if not isinstance(cells, (list, tuple)):
        raise InvalidInputError("field 'cells' must be a list")
    parsed = []
    for entry in cells:
        if not isinstance(entry, Mapping):
            raise InvalidInputError(f"cell entries must be objects, got {entry!r}")
        missing = [k for k in ("id", "dim") if k not in entry]
        if missing:
            raise InvalidInputError(f"cell entry missing field {missing[0]!r}: {entry!r}")
        boundary = []
        for b in entry.get("boundary", []):
            if not isinstance(b, Mapping) or "cell" not in b or "deg" not in b:
                raise InvalidInputError(f"boundary entries need fields 'cell' and 'deg', got {b!r}")
            boundary.append((b["cell"], b["deg"]))
        parsed.append(Cell(entry["id"], entry["dim"], tuple(boundary)))
    return CellComplex(parsed)


def complex_to_dict(c: CellComplex) -> dict:
    return {
        "cells": [
            {
                "id": cell.id,
                "dim": cell.dim,
                "boundary": [{"cell": f, "deg": d} for f, d in cell.boundary],
            }
            for cell in c.cells
        ]
    }
