"""Symbolic cell-decomposition descriptors for algebras built level by
level from pullbacks: commutative fibers counted by cells, attaching
data recorded as chain ids, and an exact pullback dimension count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .complexes import CellComplex, chain_id_for, chain_lattice, require_valid
from .errors import InvalidInputError, InvalidMorseError, UnsupportedComplexError
from .homology import IntegerMatrix, morse_complex
from .morse import (
    CONVENTION_PAPER,
    MorseFunction,
    critical_chains,
    is_acceptable,
    matching_from_function,
    normalize_convention,
)


@dataclass(frozen=True)
class DimensionVector:
    """Multiplicities (n_1,...,n_r) of a direct sum of full matrix
    algebras; empty stands for the zero algebra."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        mults = tuple(self.multiplicities)
        for n in mults:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise InvalidInputError(f"multiplicities must be positive integers, got {n!r}")
        object.__setattr__(self, "multiplicities", mults)

    @property
    def linear_dimension(self) -> int:
        return sum(n * n for n in self.multiplicities)

    @property
    def commutative(self) -> bool:
        return all(n == 1 for n in self.multiplicities)

    def __len__(self) -> int:
        return len(self.multiplicities)


def _role_labels(k: int) -> dict[str, str]:
    if k == 0:
        return {}
    return {"pi": f"pi_{k}", "f": f"f_{k}", "delta": f"delta_{k}", "phi": f"phi_{k}"}


@dataclass(frozen=True)
class Level:
    k: int
    fiber: DimensionVector
    lam: int  # cell count at this level
    attaching: Mapping[str, tuple[str, ...]]
    maps: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise InvalidInputError("level index must be a non-negative integer")
        if not isinstance(self.lam, int) or isinstance(self.lam, bool) or self.lam < 0:
            raise InvalidInputError("cell count must be a non-negative integer")
        attaching = {}
        for cell, targets in dict(self.attaching).items():
            if not isinstance(cell, str):
                raise InvalidInputError("attaching keys must be cell id strings")
            attaching[cell] = tuple(str(t) for t in targets)
        object.__setattr__(self, "attaching", attaching)
        object.__setattr__(self, "maps", dict(self.maps))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "fiber": list(self.fiber.multiplicities),
            "lambda": self.lam,
            "attaching": {cell: list(ts) for cell, ts in self.attaching.items()},
            "maps": dict(self.maps),
        }


@dataclass(frozen=True)
class NCCWDescriptor:
    levels: tuple[Level, ...]
    algebras: tuple[str, ...]

    @property
    def dimension(self) -> int:
        return max((lv.k for lv in self.levels), default=-1)

    def level(self, k: int) -> Level:
        for lv in self.levels:
            if lv.k == k:
                return lv
        raise InvalidInputError(f"descriptor has no level {k}")

    def to_dict(self) -> dict:
        return {
            "levels": [lv.to_dict() for lv in self.levels],
            "algebras": list(self.algebras),
        }


def descriptor_from_dict(doc: Mapping) -> NCCWDescriptor:
    """Parse {"levels": [{"k", "fiber", "lambda", "attaching"}]}; semantic
    problems (gaps, mismatched counts) are left for validate_descriptor."""
    if not isinstance(doc, Mapping):
        raise InvalidInputError("descriptor document must be an object")
    try:
        raw_levels = doc["levels"]
    except KeyError:
        raise InvalidInputError("descriptor document missing field 'levels'") from None
    if not isinstance(raw_levels, (list, tuple)):
        raise InvalidInputError("field 'levels' must be a list")
    levels = []
    for entry in raw_levels:
        if not isinstance(entry, Mapping):
            raise InvalidInputError(f"level entries must be objects, got {entry!r}")
        for key in ("k", "fiber", "lambda"):
            if key not in entry:
                raise InvalidInputError(f"level entry missing field {key!r}")
        attaching = entry.get("attaching", {})
        if not isinstance(attaching, Mapping):
            raise InvalidInputError("field 'attaching' must be an object")
        levels.append(
            Level(
                k=entry["k"],
                fiber=DimensionVector(tuple(entry["fiber"])),
                lam=entry["lambda"],
                attaching={cell: tuple(ts) for cell, ts in attaching.items()},
                maps=dict(entry.get("maps", _role_labels(entry["k"]))),
            )
        )
    algebras = tuple(doc.get("algebras", (f"A_{lv.k}" for lv in levels)))
    return NCCWDescriptor(tuple(levels), algebras)


def descriptor_to_dict(d: NCCWDescriptor) -> dict:
    return d.to_dict()


def commutative_nccw(c: CellComplex) -> NCCWDescriptor:
    """Decomposition of a valid complex with cells in every dimension:
    level-k fiber = (1,...,1) with one entry per k-cell, attaching data =
    the chains of each cell's listed faces.
    """
    require_valid(c)
    if len(c) == 0:
        raise UnsupportedComplexError("empty complex has no decomposition")
    counts = c.cell_counts()
    for k, count in enumerate(counts):
        if count == 0:
            raise UnsupportedComplexError(f"no cells of dimension {k}")
    levels = []
    for k, count in enumerate(counts):
        attaching = {}
        if k > 0:
            for cell in c.cells_of_dim(k):
                attaching[cell.id] = tuple(chain_id_for(face) for face in c.faces(cell.id))
        levels.append(
            Level(
                k=k,
                fiber=DimensionVector((1,) * count),
                lam=count,
                attaching=attaching,
                maps=_role_labels(k),
            )
        )
    algebras = tuple(f"A_{k}" for k in range(len(counts)))
    return NCCWDescriptor(tuple(levels), algebras)


def nccw_from_morse(
    c: CellComplex, f: MorseFunction, convention: str = CONVENTION_PAPER
) -> NCCWDescriptor:
    """Collapse along the matching induced by f, then describe the
    collapsed complex; requires the critical orders to be gap-free."""
    convention = normalize_convention(convention)
    lattice = chain_lattice(c)
    matching = matching_from_function(lattice, f)
    report = critical_chains(lattice, f, convention)
    if not is_acceptable(report):
        occupied = [k for k, m in enumerate(report.counts) if m > 0]
        gap = next(k for k in range(occupied[-1]) if report.counts[k] == 0)
        raise InvalidMorseError(
            f"not acceptable: no critical chains of order {gap} "
            f"while order {occupied[-1]} is occupied"
        )
    return commutative_nccw(morse_complex(c, lattice, matching))


def _kernel_basis(grid: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    mat = [list(row) for row in grid]
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        pv = mat[r][col]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(mat):
            break
    free_cols = [j for j in range(ncols) if j not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -mat[i][fc]
        basis.append(tuple(v))
    return basis


def pullback_dimension(
    alpha1: IntegerMatrix, alpha2: IntegerMatrix
) -> tuple[int, tuple[tuple[Fraction, ...], ...]]:
    """Dimension and rational basis of {(a1, a2) : alpha1 a1 = alpha2 a2},
    computed as the kernel of the block matrix [alpha1 | -alpha2]."""
    if alpha1.rows != alpha2.rows:
        raise InvalidInputError(
            f"codomain mismatch: {alpha1.rows} rows versus {alpha2.rows} rows"
        )
    ncols = alpha1.cols + alpha2.cols
    grid = [
        [Fraction(v) for v in r1] + [Fraction(-v) for v in r2]
        for r1, r2 in zip(alpha1.entries, alpha2.entries)
    ]
    basis = _kernel_basis(grid, ncols)
    return len(basis), tuple(basis)


@dataclass(frozen=True)
class DescriptorReport:
    errors: tuple[str, ...]
    # the descriptor cannot witness that its algebras are unital
    note: str = "unitality assumed"

    @property
    def valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {"valid": self.valid, "errors": list(self.errors), "note": self.note}


def validate_descriptor(d: NCCWDescriptor) -> DescriptorReport:
    """Structural checks: contiguous levels, cell counts consistent with
    fibers and attaching maps, attaching targets one level down."""
    errors: list[str] = []
    if not d.levels:
        errors.append("descriptor has no levels")
        return DescriptorReport(tuple(errors))
    ks = [lv.k for lv in d.levels]
    for k in sorted(set(ks)):
        if ks.count(k) > 1:
            errors.append(f"duplicate level {k}")
    top = max(ks)
    for k in range(top + 1):
        if k not in ks:
            errors.append(f"level gap at {k}")
    cell_level: dict[str, int] = {}
    for lv in d.levels:
        for cell in lv.attaching:
            cell_level[cell] = lv.k
    for lv in d.levels:
        if lv.lam < 1:
            errors.append(f"level {lv.k} has no cells")
        if lv.fiber.commutative and len(lv.fiber) != lv.lam:
            errors.append(
                f"level {lv.k} lambda {lv.lam} does not match fiber length {len(lv.fiber)}"
            )
        if lv.k == 0:
            if lv.attaching:
                errors.append("level 0 cells cannot attach")
            continue
        if len(lv.attaching) != lv.lam:
            errors.append(
                f"level {lv.k} lists {len(lv.attaching)} attaching cells for lambda {lv.lam}"
            )
        for cell, targets in lv.attaching.items():
            for t in targets:
                source = t[2:] if t.startswith("W_") else None
                if source is not None and source in cell_level and cell_level[source] != lv.k - 1:
                    errors.append(f"attaching not lower-level: {cell} -> {t}")
    return DescriptorReport(tuple(errors))
