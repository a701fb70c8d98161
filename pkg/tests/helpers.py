"""Shared builders for property-based tests."""

from itertools import product

from ncmorse import CellComplex, FinitePoset, complex_from_dict


def random_regular_complex(rng, max_cells=20) -> CellComplex:
    """A random regular complex of dimension <= 2 with at most max_cells
    cells: isolated vertices, stray edges, and polygon discs whose sides
    are fresh edges (so incidences are all +-1 and dd = 0 by construction).
    """
    n0 = rng.randint(1, 6)
    cells = [{"id": f"v{i}", "dim": 0, "boundary": []} for i in range(n0)]
    edge_n = 0

    def new_edge(a, b):
        nonlocal edge_n
        eid = f"e{edge_n}"
        edge_n += 1
        cells.append(
            {
                "id": eid,
                "dim": 1,
                "boundary": [{"cell": f"v{a}", "deg": -1}, {"cell": f"v{b}", "deg": 1}],
            }
        )
        return eid

    if n0 >= 2:
        for _ in range(rng.randint(0, 4)):
            if len(cells) >= max_cells:
                break
            a, b = rng.sample(range(n0), 2)
            new_edge(a, b)

    for face_n in range(rng.randint(0, 2)):
        if n0 < 2:
            break
        k = rng.randint(2, min(4, n0))
        if len(cells) + k + 1 > max_cells:
            break
        ring = rng.sample(range(n0), k)
        sides = [new_edge(ring[i], ring[(i + 1) % k]) for i in range(k)]
        cells.append(
            {"id": f"D{face_n}", "dim": 2, "boundary": [{"cell": s, "deg": 1} for s in sides]}
        )

    return complex_from_dict({"cells": cells})


def all_small_posets(max_size):
    """Every poset with at most max_size elements, up to isomorphism.

    Any finite poset can be labeled along a linear extension, so feeding
    every subset of the upper-triangular relation slots through the
    transitively-closing constructor covers every isomorphism class
    (some classes more than once, which is harmless here).
    """
    for n in range(max_size + 1):
        elements = [f"p{i}" for i in range(n)]
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(slots)):
            pairs = [
                (elements[i], elements[j])
                for bit, (i, j) in enumerate(slots)
                if mask >> bit & 1
            ]
            yield FinitePoset(elements, pairs)


def all_value_maps(chain_ids, values):
    """Every function from the given chains into the given value set."""
    chain_ids = list(chain_ids)
    for combo in product(values, repeat=len(chain_ids)):
        yield dict(zip(chain_ids, combo))


def subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield [x for bit, x in enumerate(items) if mask >> bit & 1]
