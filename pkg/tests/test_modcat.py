"""Classification engine checks against frozen rank tables for the S3 square.

The frozen constants below index classes by their position in the subgroup
census of S3 x S3 (sorted by order, then element tuple).  Every number was
computed independently of psi_g: double-coset counts come straight from the
group machinery, ranks are cross-checked between the two local-cocycle
recipes and the rewrite-rule oracle, and small-group identities pin the
untwisted values.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import pytest

from tdmc.cohomology import Cochain, coboundary, cohomology_cstar
from tdmc.errors import NotTrivializing, SizeBound, WrongAmbient
from tdmc.groups import (
    FiniteGroup,
    Subgroup,
    centralizer,
    conjugacy_classes,
    group_from_spec,
)
from tdmc.modcat import (
    ambient_context,
    bimodule_rank,
    classify_pairs,
    diagonal_pair,
    double_context,
    fiber_functors,
    is_fiber_functor,
    make_pair,
    module_rank_double,
    oracle_simple_bimodules,
    psi_g,
    transport_pair,
)
from tdmc.twisted_algebra import TwistedAlgebra, projective_irrep_count

# ---------------------------------------------------------------------------
# frozen expectations, census-indexed (1-based)
# ---------------------------------------------------------------------------

# index -> (order, h2 factors, [(coords, folded, double cosets, rank)], duals)
CENSUS_TABLE = {
    1: (1, (), [((), 1, 6, 6)], [36]),
    2: (2, (), [((), 1, 3, 3)], [18]),
    3: (2, (), [((), 1, 3, 3)], [18]),
    4: (2, (), [((), 1, 4, 6)], [12]),
    5: (3, (), [((), 1, 2, 2)], [36]),
    6: (3, (), [((), 1, 2, 2)], [36]),
    7: (3, (), [((), 1, 4, 10)], [20]),
    8: (4, (2,), [((0,), 1, 2, 3), ((1,), 1, 2, 3)], [9, 9]),
    9: (6, (), [((), 1, 1, 1)], [18]),
    10: (6, (), [((), 1, 1, 1)], [18]),
    11: (6, (), [((), 1, 1, 1)], [18]),
    12: (6, (), [((), 1, 2, 4)], [12]),
    13: (6, (), [((), 1, 1, 1)], [18]),
    14: (6, (), [((), 1, 2, 4)], [12]),
    15: (6, (), [((), 1, 3, 8)], [8]),
    16: (9, (3,), [((0,), 1, 2, 6), ((1,), 2, 2, 6)], [36, 20]),
    17: (12, (2,), [((0,), 1, 1, 2), ((1,), 1, 1, 2)], [9, 9]),
    18: (12, (2,), [((0,), 1, 1, 2), ((1,), 1, 1, 2)], [9, 9]),
    19: (18, (), [((), 1, 1, 3)], [18]),
    20: (18, (), [((), 1, 1, 3)], [18]),
    21: (18, (3,), [((0,), 1, 2, 6), ((1,), 2, 2, 6)], [12, 8]),
    22: (36, (2,), [((0,), 1, 1, 3), ((1,), 1, 1, 3)], [9, 9]),
}

ADMISSIBLE = {
    0: list(range(1, 23)),
    1: [1, 4, 7, 15],
    2: [1, 2, 3, 4, 7, 8, 15],
    3: [1, 4, 5, 6, 7, 12, 14, 15, 16, 21],
    4: [1, 2, 3, 4, 7, 8, 15],
    5: [1, 4, 7, 15],
}

PAIR_COUNTS = {0: 28, 1: 4, 2: 8, 3: 12, 4: 8, 5: 4}

FIBER_CLASSES_K0 = [9, 10, 11, 13]


@lru_cache(maxsize=None)
def ctx_s3(k: int):
    return double_context(group_from_spec("S3"), k)


@lru_cache(maxsize=None)
def report_s3(k: int):
    return classify_pairs(ctx_s3(k))


# ---------------------------------------------------------------------------
# the frozen tables
# ---------------------------------------------------------------------------


def test_untwisted_census_and_rank_table():
    rep = report_s3(0)
    assert rep.census_size == 22
    assert len(rep.entries) == 22
    for entry in rep.entries:
        order, h2, pairs, _ = CENSUS_TABLE[entry.index + 1]
        assert entry.subgroup.order == order
        assert entry.h2_factors == h2
        got = [
            (pe.coords, pe.folded, len(pe.breakdown.rows), pe.breakdown.total)
            for pe in entry.pairs
        ]
        assert got == pairs
    assert rep.total_pairs == 28


def test_dual_ranks():
    rep = report_s3(0)
    ctx = ctx_s3(0)
    for entry in rep.entries:
        want = CENSUS_TABLE[entry.index + 1][3]
        got = [bimodule_rank(ctx, pe.pair, pe.pair).total for pe in entry.pairs]
        assert got == want, f"census class {entry.index + 1}"


@pytest.mark.parametrize("k", range(6))
def test_admissible_classes_and_pair_counts(k):
    rep = report_s3(k)
    assert [i + 1 for i in rep.admissible_indices] == ADMISSIBLE[k]
    assert rep.total_pairs == PAIR_COUNTS[k]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rank_table_rows_unchanged_by_twist(k):
    base = {
        e.index: [(len(p.breakdown.rows), p.breakdown.total) for p in e.pairs]
        for e in report_s3(0).entries
    }
    for e in report_s3(k).entries:
        got = [(len(p.breakdown.rows), p.breakdown.total) for p in e.pairs]
        assert got == base[e.index], f"census class {e.index + 1} at k={k}"


def test_fiber_functors_untwisted():
    rep = report_s3(0)
    ff = fiber_functors(ctx_s3(0), rep)
    hit = sorted(
        e.index + 1 for e in rep.entries for pe in e.pairs if pe in ff
    )
    assert hit == FIBER_CLASSES_K0
    for pe in ff:
        assert pe.coords == ()  # trivial cohomology, trivial torsor coordinate
        assert pe.breakdown.total == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_no_fiber_functors_when_twisted(k):
    assert fiber_functors(ctx_s3(k), report_s3(k)) == []


# ---------------------------------------------------------------------------
# cross-recipe consistency
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("k", [0, 3])
def test_orbit_recipe_matches_two_sided_recipe(k):
    ctx = ctx_s3(k)
    diag = diagonal_pair(ctx)
    for entry in report_s3(k).entries:
        for pe in entry.pairs:
            two_sided = bimodule_rank(ctx, diag, pe.pair)
            assert two_sided.total == pe.breakdown.total, (
                f"census class {entry.index + 1}, coords {pe.coords}"
            )


@pytest.mark.parametrize("k", [0, 3])
def test_rewrite_oracle_agrees_per_coset(k):
    ctx = ctx_s3(k)
    diag = diagonal_pair(ctx)
    for entry in report_s3(k).entries:
        for pe in entry.pairs:
            for row in bimodule_rank(ctx, diag, pe.pair).rows:
                got = oracle_simple_bimodules(ctx, diag, pe.pair, row.representative)
                assert got == row.count, (
                    f"census class {entry.index + 1}, coords {pe.coords}, "
                    f"coset of {row.representative}"
                )


def test_representative_independence():
    # psi_g at any point of the same orbit gives the same irreducible count
    ctx = ctx_s3(3)
    rep = report_s3(3)
    from tdmc.groups import orbit_decomposition

    for entry in rep.entries:
        for pe in entry.pairs:
            dec = orbit_decomposition(ctx.base, pe.pair.subgroup)
            for orbit, row in zip(dec.orbits, pe.breakdown.rows):
                for g in orbit:
                    stab, coc = psi_g("double", ctx, g, pe.pair)
                    m = projective_irrep_count(TwistedAlgebra(stab.as_group, coc))
                    assert m == row.count


def test_conjugating_a_pair_preserves_ranks():
    ctx = ctx_s3(3)
    rep = report_s3(3)
    diag = diagonal_pair(ctx)
    rng = np.random.default_rng(17)
    for entry in rep.entries:
        pe = entry.pairs[-1]
        for n in rng.integers(0, 36, size=2):
            moved = transport_pair(ctx, pe.pair, int(n))
            assert bimodule_rank(ctx, diag, moved).total == pe.breakdown.total
            assert bimodule_rank(ctx, moved, moved).total == bimodule_rank(
                ctx, pe.pair, pe.pair
            ).total


def test_classification_ignores_coboundary_shift_of_omega():
    S3 = group_from_spec("S3")
    omega = cohomology_cstar(S3, 3).generators[0]
    rng = np.random.default_rng(3)
    chi = np.array(rng.integers(0, 6, size=(6, 6)))
    chi[0, :] = 0
    chi[:, 0] = 0
    shifted = omega + coboundary(Cochain(S3, 2, 6, chi))
    rep = classify_pairs(double_context(S3, omega=shifted))
    assert [i + 1 for i in rep.admissible_indices] == ADMISSIBLE[1]
    assert rep.total_pairs == PAIR_COUNTS[1]
    base = report_s3(1)
    for a, b in zip(rep.entries, base.entries):
        assert [p.breakdown.total for p in a.pairs] == [
            p.breakdown.total for p in b.pairs
        ]


# ---------------------------------------------------------------------------
# identities on small doubles
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2", "S3"])
def test_untwisted_diagonal_rank_counts_centralizer_irreps(name):
    G = group_from_spec(name)
    ctx = double_context(G, 0)
    bd = module_rank_double(ctx, diagonal_pair(ctx))
    want = sum(
        len(conjugacy_classes(centralizer(G, cls[0]).as_group))
        for cls in conjugacy_classes(G)
    )
    assert bd.total == want


def test_small_double_pair_counts():
    Z2 = group_from_spec("Z2")
    assert classify_pairs(double_context(Z2, 0)).total_pairs == 6
    assert classify_pairs(double_context(Z2, 1)).total_pairs == 2
    triv = FiniteGroup(np.zeros((1, 1), dtype=np.int64))
    rep = classify_pairs(double_context(triv, 0))
    assert rep.total_pairs == 1
    assert rep.entries[0].pairs[0].breakdown.total == 1


def test_exact_factorization_gives_fiber_functor():
    # ambient S3, trivial cocycle: rotations and a flip factor the group
    S3 = group_from_spec("S3")
    ctx = ambient_context(S3, Cochain.zero(S3, 3, 6))
    rot = make_pair(ctx, Subgroup(S3, [0, 3, 4]))
    flip = make_pair(ctx, Subgroup(S3, [0, 1]))
    assert is_fiber_functor(ctx, rot, flip)
    assert bimodule_rank(ctx, rot, flip).total == 1
    # rotations against themselves: two double cosets, no fiber functor
    assert not is_fiber_functor(ctx, rot, rot)


# ---------------------------------------------------------------------------
# guard rails
# ---------------------------------------------------------------------------


def test_make_pair_validation():
    ctx = ctx_s3(1)
    GG = ctx.ambient
    flip_left = Subgroup(GG, [0, 6])
    with pytest.raises(NotTrivializing):
        make_pair(ctx, flip_left)  # inadmissible at k=1
    ctx0 = ctx_s3(0)
    klein = Subgroup(GG, [0, 1, 6, 7])
    vals = np.zeros((4, 4), dtype=np.int64)
    vals[1, 2] = 1  # d of this is nonzero, so it trivializes nothing
    with pytest.raises(NotTrivializing):
        make_pair(ctx0, klein, Cochain(klein.as_group, 2, ctx0.modulus, vals))
    with pytest.raises(NotTrivializing):
        zero6 = Cochain(klein.as_group, 2, 6, np.zeros((4, 4), dtype=np.int64))
        make_pair(ctx0, klein, zero6)  # wrong modulus
    S3 = group_from_spec("S3")
    with pytest.raises(WrongAmbient):
        make_pair(ctx0, Subgroup(S3, [0, 1]))


def test_psi_g_variant_errors():
    ctx = ctx_s3(0)
    diag = diagonal_pair(ctx)
    with pytest.raises(ValueError):
        psi_g("sideways", ctx, 0, diag)
    S3 = group_from_spec("S3")
    plain = ambient_context(S3, Cochain.zero(S3, 3, 6))
    pair = make_pair(plain, Subgroup(S3, [0, 3, 4]))
    with pytest.raises(WrongAmbient):
        psi_g("double", plain, 0, pair)


def test_oracle_size_bound():
    ctx = ctx_s3(0)
    whole = report_s3(0).entries[-1].pairs[0].pair  # the full 36-element class
    with pytest.raises(SizeBound):
        oracle_simple_bimodules(ctx, whole, whole, 0)  # stabilizer has order 36
