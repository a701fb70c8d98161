import random
from fractions import Fraction

import pytest

from ncmorse import (
    CONVENTION_FORMAN,
    CONVENTION_PAPER,
    CriticalReport,
    InvalidInputError,
    InvalidMorseError,
    MorseFunction,
    chain_lattice,
    complex_from_dict,
    critical_chains,
    generate_morse,
    is_acceptable,
    is_acyclic_matching,
    is_modified_morse,
    matching_from_function,
    matching_from_pairs,
    morse_from_dict,
    morse_to_dict,
    normalize_convention,
)
from helpers import all_value_maps, random_regular_complex
from oracles import digraph_has_cycle


def square_cycle_lattice():
    # 4 vertices and 4 edges around a square, no 2-cells
    cells = [{"id": f"v{i}", "dim": 0, "boundary": []} for i in range(4)]
    for i in range(4):
        cells.append(
            {
                "id": f"s{i}",
                "dim": 1,
                "boundary": [
                    {"cell": f"v{i}", "deg": -1},
                    {"cell": f"v{(i + 1) % 4}", "deg": 1},
                ],
            }
        )
    return chain_lattice(complex_from_dict({"cells": cells}))


def single_path_lattice():
    # a loop edge under a doubly degenerate disc: one chain per order with
    # no diamond between them, the shape on which double exceptions live
    return chain_lattice(
        complex_from_dict(
            {
                "cells": [
                    {"id": "v", "dim": 0, "boundary": []},
                    {"id": "e", "dim": 1, "boundary": [{"cell": "v", "deg": 0}]},
                    {"id": "D", "dim": 2, "boundary": [{"cell": "e", "deg": 0}]},
                ]
            }
        )
    )


def test_convention_names_and_aliases():
    assert normalize_convention("paper") == CONVENTION_PAPER
    assert normalize_convention("forman") == CONVENTION_FORMAN
    assert normalize_convention(CONVENTION_PAPER) == CONVENTION_PAPER
    assert normalize_convention(CONVENTION_FORMAN) == CONVENTION_FORMAN
    with pytest.raises(InvalidInputError):
        normalize_convention("strict")


def test_morse_function_parses_exact_rationals():
    f = MorseFunction({"W_a": "3/2", "W_b": 2, "W_c": Fraction(-1, 3)})
    assert f.value("W_a") == Fraction(3, 2)
    assert f.value("W_b") == 2
    with pytest.raises(InvalidInputError):
        MorseFunction({"W_a": 0.5})
    with pytest.raises(InvalidInputError):
        MorseFunction({"W_a": True})
    with pytest.raises(InvalidInputError):
        MorseFunction({"W_a": "one"})
    with pytest.raises(InvalidInputError):
        morse_from_dict({})


def test_morse_dict_round_trip():
    doc = {"values": {"W_0": "0", "W_I": "3/2"}}
    assert morse_to_dict(morse_from_dict(doc)) == doc


def test_validity_examples(interval_lattice, point_lattice, f012):
    assert is_modified_morse(interval_lattice, f012).valid
    assert is_modified_morse(point_lattice, MorseFunction({"W_pt": 7})).valid

    report = is_modified_morse(interval_lattice, MorseFunction({"W_0": 0, "W_1": 0, "W_I": 0}))
    assert not report.valid
    kinds = {(v.chain, v.kind) for v in report.violations}
    assert ("W_I", "ascending_facets") in kinds
    assert set(report.violations[0].neighbors) == {"W_0", "W_1"}


def test_validity_requires_total_function(interval_lattice):
    with pytest.raises(InvalidInputError):
        is_modified_morse(interval_lattice, MorseFunction({"W_0": 0}))


def test_double_exception_is_valid_but_blocks_matching():
    l = single_path_lattice()
    f = MorseFunction({"W_v": 1, "W_e": 0, "W_D": 0})
    report = is_modified_morse(l, f)
    assert report.valid
    assert report.double_exceptions == ("W_e",)
    with pytest.raises(InvalidMorseError, match="W_e"):
        matching_from_function(l, f)


def test_critical_examples(interval_lattice, f012, f021):
    paper = critical_chains(interval_lattice, f012, "paper")
    assert paper.critical == (("W_0", "W_1"), ("W_I",))
    assert paper.counts == (2, 1)
    assert paper.convention == CONVENTION_PAPER
    assert paper.total == 3

    forman = critical_chains(interval_lattice, f021, "forman")
    assert forman.critical == (("W_0",), ())
    assert forman.counts == (1, 0)


def test_order_function_makes_every_chain_critical(torus_lattice, circle_lattice):
    for l in (torus_lattice, circle_lattice):
        f = MorseFunction({ch.id: ch.order for ch in l.chains})
        report = critical_chains(l, f, "paper")
        assert report.total == len(l)


def test_is_acceptable():
    def rep(counts):
        critical = tuple(tuple(f"W_{k}_{i}" for i in range(m)) for k, m in enumerate(counts))
        return CriticalReport(critical=critical, counts=tuple(counts), convention=CONVENTION_PAPER)

    assert is_acceptable(rep((2, 1)))
    assert not is_acceptable(rep((0, 1)))
    assert is_acceptable(rep(()))
    assert is_acceptable(rep((1, 0)))
    assert not is_acceptable(rep((1, 0, 2)))


def test_matching_examples(interval_lattice, f021):
    m = matching_from_function(interval_lattice, f021)
    assert m.pairs == (("W_1", "W_I"),)
    assert m.unmatched == ("W_0",)
    assert is_acyclic_matching(interval_lattice, m)

    order_f = MorseFunction({"W_0": 0, "W_1": 0, "W_I": 1})
    m2 = matching_from_function(interval_lattice, order_f)
    assert m2.pairs == ()
    assert set(m2.unmatched) == {"W_0", "W_1", "W_I"}

    with pytest.raises(InvalidMorseError):
        matching_from_function(interval_lattice, MorseFunction({"W_0": 0, "W_1": 0, "W_I": 0}))


def test_matching_constructor_rejects_double_booking(interval_lattice):
    with pytest.raises(InvalidInputError):
        matching_from_pairs(interval_lattice, [("W_0", "W_I"), ("W_1", "W_I")])
    with pytest.raises(InvalidInputError):
        matching_from_pairs(interval_lattice, [("W_0", "W_1")])  # not a cover


def test_acyclicity_examples(interval_lattice):
    assert is_acyclic_matching(interval_lattice, matching_from_pairs(interval_lattice, []))

    square = square_cycle_lattice()
    around = [("W_v1", "W_s0"), ("W_v2", "W_s1"), ("W_v3", "W_s2"), ("W_v0", "W_s3")]
    assert not is_acyclic_matching(square, matching_from_pairs(square, around))
    assert is_acyclic_matching(square, matching_from_pairs(square, around[:2]))


def test_acyclicity_agrees_with_matrix_power_oracle():
    square = square_cycle_lattice()
    ids = [ch.id for ch in square.chains]
    covers = list(square.hasse)
    rng = random.Random(23)
    for _ in range(80):
        rng.shuffle(covers)
        pairs = []
        used = set()
        for lo, hi in covers:
            if lo in used or hi in used or rng.random() < 0.5:
                continue
            pairs.append((lo, hi))
            used.update((lo, hi))
        m = matching_from_pairs(square, pairs)
        matched = set(pairs)
        edges = [(hi, lo) if (lo, hi) in matched else (lo, hi) for lo, hi in square.hasse]
        assert is_acyclic_matching(square, m) == (not digraph_has_cycle(ids, edges))


def test_unmatched_equals_forman_critical_exhaustively(interval_lattice, circle_lattice):
    for l in (interval_lattice, circle_lattice):
        ids = [ch.id for ch in l.chains]
        for values in all_value_maps(ids, range(6)):
            f = MorseFunction(values)
            report = is_modified_morse(l, f)
            if not report.valid or report.double_exceptions:
                continue
            m = matching_from_function(l, f)
            forman = critical_chains(l, f, "forman")
            assert set(m.unmatched) == {cid for ids_k in forman.critical for cid in ids_k}
            assert is_acyclic_matching(l, m)


def test_paper_critical_contains_forman_critical():
    rng = random.Random(29)
    for _ in range(40):
        c = random_regular_complex(rng, max_cells=12)
        l = chain_lattice(c)
        f = MorseFunction({ch.id: Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for ch in l.chains})
        paper = critical_chains(l, f, "paper")
        forman = critical_chains(l, f, "forman")
        paper_ids = {cid for ids in paper.critical for cid in ids}
        forman_ids = {cid for ids in forman.critical for cid in ids}
        assert forman_ids <= paper_ids


def test_shift_and_scale_invariance(circle_lattice):
    rng = random.Random(31)
    ids = [ch.id for ch in circle_lattice.chains]
    for _ in range(30):
        f = MorseFunction({cid: Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for cid in ids})
        a = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        b = Fraction(rng.randint(-10, 10), rng.randint(1, 3))
        g = MorseFunction({cid: a * f.value(cid) + b for cid in ids})
        for conv in ("paper", "forman"):
            assert critical_chains(circle_lattice, f, conv).critical == \
                critical_chains(circle_lattice, g, conv).critical
        rep = is_modified_morse(circle_lattice, f)
        assert rep.valid == is_modified_morse(circle_lattice, g).valid
        if rep.valid and not rep.double_exceptions:
            assert matching_from_function(circle_lattice, f).pairs == \
                matching_from_function(circle_lattice, g).pairs


def test_generate_on_point_lattice(point_lattice):
    f = generate_morse(point_lattice, seed=0)
    assert f.values == {"W_pt": Fraction(0)}


def test_generate_is_deterministic_and_valid(interval_lattice, torus_lattice, circle_lattice):
    for l in (interval_lattice, torus_lattice, circle_lattice):
        for seed in range(12):
            f = generate_morse(l, seed)
            assert f == generate_morse(l, seed)
            report = is_modified_morse(l, f)
            assert report.valid and not report.double_exceptions
            m = matching_from_function(l, f)
            assert is_acyclic_matching(l, m)
            forman = critical_chains(l, f, "forman")
            assert set(m.unmatched) == {cid for ids in forman.critical for cid in ids}


def test_generate_on_torus_meets_morse_inequalities(torus_lattice):
    # no unit covers exist, so every chain stays critical: m = (1, 2, 1) = b
    for seed in range(8):
        f = generate_morse(torus_lattice, seed)
        counts = critical_chains(torus_lattice, f, "forman").counts
        assert counts == (1, 2, 1)


def test_generate_rejects_empty_lattice():
    l = chain_lattice(complex_from_dict({"cells": []}))
    with pytest.raises(InvalidInputError):
        generate_morse(l, 0)


def test_morse_function_equality_ignores_representation():
    assert MorseFunction({"W_a": 2}) == MorseFunction({"W_a": "2"})
    assert MorseFunction({"W_a": 2}) != MorseFunction({"W_a": 3})
