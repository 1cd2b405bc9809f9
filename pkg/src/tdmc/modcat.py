"""Classification of module categories over twisted doubles of finite groups.

A context fixes an ambient group G with a 3-cocycle omega, everything written
additively in Z/Lambda at the session modulus Lambda = |G|^2.  Module
categories correspond to pairs (H, psi): a subgroup H on which omega becomes a
coboundary together with a 2-cochain psi with d(psi) = omega|_H, taken up to
conjugation and up to shifting psi by a C*-trivial 2-cocycle.  The rank of the
category attached to a pair is a sum of twisted-group-algebra irreducible
counts over double cosets (general two-sided form) or over orbits of H on the
base group (direct-square form).  The two local-cocycle recipes are coded
independently so the tests can play them against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .cohomology import (
    Cochain,
    build_tilde_omega,
    coboundary,
    cohomology_cstar,
    cohomology_mod,
    is_cocycle,
    restrict,
    small_generating_set,
    solve_trivialization,
)
from .errors import (
    FormulaNotClosed,
    NotACocycle,
    NotTrivializing,
    SizeBound,
    WrongAmbient,
)
from .groups import (
    DirectSquare,
    FiniteGroup,
    Subgroup,
    _same_group,
    direct_square_with_diagonal,
    double_cosets,
    orbit_decomposition,
    subgroups_up_to_conjugacy,
)
from .twisted_algebra import (
    TwistedAlgebra,
    center_dimension_from_structure,
    projective_irrep_count,
)

__all__ = [
    "AmbientContext",
    "DoubleContext",
    "PairHPsi",
    "RankRow",
    "RankBreakdown",
    "PairEntry",
    "ClassEntry",
    "ClassificationReport",
    "ambient_context",
    "double_context",
    "make_pair",
    "diagonal_pair",
    "transport_pair",
    "psi_g",
    "bimodule_rank",
    "module_rank_double",
    "classify_pairs",
    "pair_from_coords",
    "is_fiber_functor",
    "fiber_functors",
    "oracle_simple_bimodules",
]

_ORACLE_COSET_MAX = 16


# ---------------------------------------------------------------------------
# contexts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AmbientContext:
    """Ambient group + 3-cocycle, both held at the session modulus |G|^2.

    The session modulus gives every subgroup H the headroom
    content(omega|_H) * |H| required for finite solves to decide C*-questions
    exactly (content and |H| both divide |G|).
    """

    ambient: FiniteGroup
    omega: Cochain
    modulus: int


@dataclass(frozen=True)
class DoubleContext(AmbientContext):
    """Ambient = G x G with the difference cocycle of a 3-cocycle on G.

    omega_k records the multiple of the canonical generator used to build the
    base cocycle, or None when an explicit cochain was supplied.
    """

    base: FiniteGroup
    square: DirectSquare
    base_omega: Cochain
    omega_k: Optional[int]


def _check_base_cocycle(G: FiniteGroup, omega: Cochain) -> None:
    if omega.degree != 3:
        raise NotACocycle("context needs a 3-cocycle")
    if not _same_group(omega.group, G):
        raise WrongAmbient("cocycle lives on a different group")
    if G.order % omega.modulus != 0:
        raise ValueError(
            f"cocycle modulus {omega.modulus} must divide the group order {G.order}"
        )
    if not is_cocycle(omega):
        raise NotACocycle("context cocycle fails the 3-cocycle identity")


def ambient_context(G: FiniteGroup, omega: Cochain) -> AmbientContext:
    _check_base_cocycle(G, omega)
    session = G.order**2
    return AmbientContext(ambient=G, omega=omega.embed(session), modulus=session)


def double_context(
    base: FiniteGroup, omega_k: int = 0, omega: Optional[Cochain] = None
) -> DoubleContext:
    """Context for the direct square of `base` with the difference cocycle.

    With omega=None the base cocycle is omega_k times the first canonical
    generator of the degree-3 C* cohomology of the base (zero when that group
    is trivial); an explicit cochain overrides this and sets omega_k to None.
    """
    if omega is None:
        h3 = cohomology_cstar(base, 3)
        if h3.generators:
            omega = h3.generators[0].scale(omega_k)
        else:
            omega = Cochain.zero(base, 3, base.order)
        recorded: Optional[int] = omega_k
    else:
        recorded = None
    _check_base_cocycle(base, omega)
    square = direct_square_with_diagonal(base)
    session = square.group.order**2
    tilde = build_tilde_omega(omega, square).embed(session)
    return DoubleContext(
        ambient=square.group,
        omega=tilde,
        modulus=session,
        base=base,
        square=square,
        base_omega=omega.embed(session),
        omega_k=recorded,
    )


# ---------------------------------------------------------------------------
# pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairHPsi:
    """A subgroup of the ambient group plus a 2-cochain trivializing omega on it."""

    subgroup: Subgroup
    psi: Cochain


def make_pair(
    ctx: AmbientContext, subgroup: Subgroup, psi: Optional[Cochain] = None
) -> PairHPsi:
    """Validated pair; with psi=None a trivialization is solved for.

    Raises NotTrivializing when omega does not become a coboundary on the
    subgroup (psi=None) or when the supplied cochain fails d(psi) = omega|_H
    on the nose.
    """
    if not _same_group(subgroup.parent, ctx.ambient):
        raise WrongAmbient("pair subgroup must live in the context's ambient group")
    if psi is None:
        solved = solve_trivialization(ctx.omega, subgroup, ctx.modulus)
        if solved is None:
            raise NotTrivializing(
                f"omega stays nontrivial on the subgroup of order {subgroup.order}"
            )
        return PairHPsi(subgroup, solved)
    if psi.degree != 2 or psi.modulus != ctx.modulus:
        raise NotTrivializing("psi must be a 2-cochain at the session modulus")
    if psi.group.order != subgroup.order:
        raise NotTrivializing("psi must live on the pair's subgroup")
    if not coboundary(psi).same_values(restrict(ctx.omega, subgroup)):
        raise NotTrivializing("d(psi) must equal omega restricted to the subgroup")
    return PairHPsi(subgroup, psi)


def diagonal_pair(ctx: DoubleContext) -> PairHPsi:
    """(diagonal subgroup, 0): the difference cocycle vanishes there on the nose."""
    diag = ctx.square.diagonal
    return make_pair(ctx, diag, Cochain.zero(diag.as_group, 2, ctx.modulus))


def _parent_index(H: Subgroup) -> np.ndarray:
    """Array mapping parent element -> local index (-1 off the subgroup)."""
    out = np.full(H.parent.order, -1, dtype=np.int64)
    out[np.array(H.elements, dtype=np.int64)] = np.arange(H.order, dtype=np.int64)
    return out


# ---------------------------------------------------------------------------
# local 2-cocycles at a coset / orbit representative
# ---------------------------------------------------------------------------


def _general_stabilizer(
    G: FiniteGroup, g: int, H1: Subgroup, H2: Subgroup
) -> Tuple[Subgroup, np.ndarray]:
    """H1 ∩ g H2 g^{-1} together with the map x -> g^{-1} x g on all of G."""
    ginv = G.inverse(g)
    conj_back = G.mul[G.mul[ginv, np.arange(G.order, dtype=np.int64)], g]
    members = [x for x in H1.elements if int(conj_back[x]) in H2]
    return Subgroup(G, members), conj_back


def _psi_general(
    ctx: AmbientContext, g: int, left: PairHPsi, right: PairHPsi
) -> Tuple[Subgroup, Cochain]:
    G = ctx.ambient
    stab, conj_back = _general_stabilizer(G, g, left.subgroup, right.subgroup)
    P = stab.to_parent
    A, B = np.meshgrid(P, P, indexing="ij")
    mul, inv = G.mul, G.inv
    om = ctx.omega.values
    f1 = _parent_index(left.subgroup)
    f2 = _parent_index(right.subgroup)
    a2 = conj_back[inv[B]]  # g^-1 h'^-1 g, lands in the right subgroup
    b2 = conj_back[inv[A]]  # g^-1 h^-1 g
    vals = (
        left.psi.values[f1[A], f1[B]]
        + right.psi.values[f2[a2], f2[b2]]
        - om[mul[mul[A, B], g], a2, b2]
        + om[A, B, g]
        + om[A, mul[B, g], a2]
    )
    coc = Cochain(stab.as_group, 2, ctx.modulus, vals)
    if not is_cocycle(coc):
        raise FormulaNotClosed(
            f"two-sided local cochain at representative {g} is not a cocycle"
        )
    return stab, coc


def _psi_double(ctx: DoubleContext, g: int, pair: PairHPsi) -> Tuple[Subgroup, Cochain]:
    Gb = ctx.base
    n = Gb.order
    ginv = Gb.inverse(g)
    conj_back = Gb.mul[Gb.mul[ginv, np.arange(n, dtype=np.int64)], g]
    members = [x for x in range(n) if (x * n + int(conj_back[x])) in pair.subgroup]
    stab = Subgroup(Gb, members)
    P = stab.to_parent
    A, B = np.meshgrid(P, P, indexing="ij")
    mul, inv = Gb.mul, Gb.inv
    om = ctx.base_omega.values
    fH = _parent_index(pair.subgroup)
    Ai, Bi = inv[A], inv[B]
    ca, cb = conj_back[A], conj_back[B]  # g^-1 h g and g^-1 h' g
    vals = (
        -pair.psi.values[fH[A * n + ca], fH[B * n + cb]]
        + om[ginv, Bi, Ai]
        + om[A, B, Bi]
        + om[cb, mul[ginv, Bi], Ai]
        - om[mul[A, B], Bi, Ai]
        - om[ca, cb, mul[mul[ginv, Bi], Ai]]
    )
    coc = Cochain(stab.as_group, 2, ctx.modulus, vals)
    if not is_cocycle(coc):
        raise FormulaNotClosed(
            f"orbit-stabilizer local cochain at representative {g} is not a cocycle"
        )
    return stab, coc


def psi_g(
    variant: str, ctx: AmbientContext, g: int, *pairs: PairHPsi
) -> Tuple[Subgroup, Cochain]:
    """Local 2-cocycle of a coset/orbit representative, with its stabilizer.

    variant="general": pairs = (left, right) in an arbitrary ambient group;
    g indexes the double coset left.subgroup \\ G / right.subgroup and the
    result lives on left.subgroup ∩ g right.subgroup g^{-1}.

    variant="double": pairs = (pair,) with pair.subgroup inside a direct
    square; g is an element of the base group and the result lives on the
    first projection of the stabilizer of g under (h1,h2)·g = h1 g h2^{-1}.

    Both recipes are checked to produce a genuine normalized 2-cocycle
    (FormulaNotClosed otherwise).
    """
    if variant == "general":
        left, right = pairs
        return _psi_general(ctx, g, left, right)
    if variant == "double":
        if not isinstance(ctx, DoubleContext):
            raise WrongAmbient("variant='double' needs a DoubleContext")
        (pair,) = pairs
        return _psi_double(ctx, g, pair)
    raise ValueError(f"unknown psi_g variant {variant!r}")


def transport_pair(ctx: AmbientContext, pair: PairHPsi, n: int) -> PairHPsi:
    """The conjugated pair (n H n^{-1}, psi^n).

    psi^n(x, y) = psi(n^{-1}xn, n^{-1}yn) + omega(x,y,n) - omega(x,n,n^{-1}yn)
    + omega(n, n^{-1}xn, n^{-1}yn); that this again trivializes omega is
    checked on the nose, not assumed.
    """
    G = ctx.ambient
    moved = pair.subgroup.conjugate_by(n)
    ninv = G.inverse(n)
    back = G.mul[G.mul[ninv, np.arange(G.order, dtype=np.int64)], n]
    P = moved.to_parent
    X, Y = np.meshgrid(P, P, indexing="ij")
    bx, by = back[X], back[Y]
    om = ctx.omega.values
    fH = _parent_index(pair.subgroup)
    vals = pair.psi.values[fH[bx], fH[by]] + om[X, Y, n] - om[X, n, by] + om[n, bx, by]
    psin = Cochain(moved.as_group, 2, ctx.modulus, vals)
    if not coboundary(psin).same_values(restrict(ctx.omega, moved)):
        raise FormulaNotClosed(
            "transported cochain fails to trivialize omega on the conjugate subgroup"
        )
    return PairHPsi(moved, psin)


# ---------------------------------------------------------------------------
# ranks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankRow:
    """One double coset / orbit: representative, stabilizer, local cocycle, count."""

    representative: int
    stabilizer: Subgroup
    cocycle: Cochain
    count: int


@dataclass(frozen=True)
class RankBreakdown:
    rows: Tuple[RankRow, ...]

    @property
    def total(self) -> int:
        return sum(row.count for row in self.rows)


def bimodule_rank(
    ctx: AmbientContext, left: PairHPsi, right: PairHPsi
) -> RankBreakdown:
    """Simple-object count of the two-sided category, one row per double coset."""
    rows = []
    for coset in double_cosets(ctx.ambient, left.subgroup, right.subgroup):
        g = coset[0]
        stab, coc = psi_g("general", ctx, g, left, right)
        m = projective_irrep_count(TwistedAlgebra(stab.as_group, coc))
        rows.append(RankRow(g, stab, coc, m))
    return RankBreakdown(tuple(rows))


def module_rank_double(ctx: DoubleContext, pair: PairHPsi) -> RankBreakdown:
    """Rank of the module category of a pair in a direct square, one row per orbit."""
    dec = orbit_decomposition(ctx.base, pair.subgroup)
    rows = []
    for g, known in zip(dec.representatives, dec.stabilizers):
        stab, coc = psi_g("double", ctx, g, pair)
        assert stab.elements == known.elements  # same stabilizer both ways
        m = projective_irrep_count(TwistedAlgebra(stab.as_group, coc))
        rows.append(RankRow(g, stab, coc, m))
    return RankBreakdown(tuple(rows))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairEntry:
    """One pair up to equivalence: torsor coordinates of psi, how many C*-classes
    the normalizer folded together, the pair itself, and its rank breakdown."""

    coords: Tuple[int, ...]
    folded: int
    pair: PairHPsi
    breakdown: RankBreakdown


@dataclass(frozen=True)
class ClassEntry:
    """All pairs supported on one admissible census class of subgroups."""

    index: int
    subgroup: Subgroup
    h2_factors: Tuple[int, ...]
    pairs: Tuple[PairEntry, ...]


@dataclass(frozen=True)
class ClassificationReport:
    context: DoubleContext
    census_size: int
    entries: Tuple[ClassEntry, ...]

    @property
    def total_pairs(self) -> int:
        return sum(len(e.pairs) for e in self.entries)

    @property
    def admissible_indices(self) -> Tuple[int, ...]:
        return tuple(e.index for e in self.entries)


def _torsor_cochain(
    psi0: Cochain, gens: List[Cochain], coords: Tuple[int, ...]
) -> Cochain:
    acc = psi0
    for t, gen in zip(coords, gens):
        if t:
            acc = acc + gen.scale(t)
    return acc


def classify_pairs(ctx: DoubleContext) -> ClassificationReport:
    """All pairs (H, psi) up to conjugacy and C*-coboundary, with ranks.

    Walks the subgroup census of the ambient square; for each class where
    omega trivializes, enumerates the torsor of trivializations over the
    degree-2 C* cohomology of the subgroup and folds it by the normalizer
    action.  Deterministic: census order, lexicographic torsor coordinates,
    minimal representatives.
    """
    census = subgroups_up_to_conjugacy(ctx.ambient)
    entries: List[ClassEntry] = []
    for ci, cls in enumerate(census):
        H = cls.rep
        psi0 = solve_trivialization(ctx.omega, H, ctx.modulus)
        if psi0 is None:
            continue
        h2 = cohomology_cstar(H.as_group, 2)
        factors = tuple(h2.invariant_factors)
        gens = [b.embed(ctx.modulus) for b in h2.generators]
        box = list(itertools.product(*(range(f) for f in factors)))
        if len(box) > 1:
            orbits = _fold_by_normalizer(ctx, cls, psi0, gens, factors, h2, box)
        else:
            orbits = [box]
        pair_entries = []
        for orbit in sorted(orbits, key=min):
            coords = min(orbit)
            pair = make_pair(ctx, H, _torsor_cochain(psi0, gens, coords))
            breakdown = module_rank_double(ctx, pair)
            pair_entries.append(PairEntry(coords, len(orbit), pair, breakdown))
        entries.append(ClassEntry(ci, H, factors, tuple(pair_entries)))
    return ClassificationReport(ctx, len(census), tuple(entries))


def _fold_by_normalizer(ctx, cls, psi0, gens, factors, h2, box):
    """Orbits of the normalizer on the torsor of C*-classes of trivializations."""
    H = cls.rep
    # coordinates of an arbitrary session-modulus 2-cocycle on H along the C*
    # factors: exact lookup at the session modulus, then push the generators'
    # classes through (the C* lookup alone would fall back to slow solves).
    ambient_h2 = cohomology_mod(H.as_group, 2, ctx.modulus)
    through = [h2.lookup(c) for c in ambient_h2.generators]

    def cstar_coords(coc: Cochain) -> Tuple[int, ...]:
        raw = ambient_h2.lookup(coc)
        acc = [0] * len(factors)
        for c, img in zip(raw, through):
            for j, v in enumerate(img):
                acc[j] += c * v
        return tuple(a % f for a, f in zip(acc, factors))

    for i, gen in enumerate(gens):
        want = tuple(int(i == j) for j in range(len(factors)))
        assert cstar_coords(gen) == want  # generators must read back as units

    norm = cls.normalizer
    ngens = [norm.elements[i] for i in small_generating_set(norm.as_group)]
    maps = []
    for n in ngens:
        image: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for t in box:
            moved = transport_pair(ctx, PairHPsi(H, _torsor_cochain(psi0, gens, t)), n)
            assert moved.subgroup.elements == H.elements
            image[t] = cstar_coords(moved.psi - psi0)
        assert len(set(image.values())) == len(box)  # the action permutes classes
        maps.append(image)
    # components under permutation generators = orbits of the generated group
    orbits: List[List[Tuple[int, ...]]] = []
    seen = set()
    for start in box:
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        orbit = [start]
        while frontier:
            t = frontier.pop()
            for image in maps:
                s = image[t]
                if s not in seen:
                    seen.add(s)
                    orbit.append(s)
                    frontier.append(s)
        orbits.append(orbit)
    return orbits


def pair_from_coords(
    ctx: AmbientContext, subgroup: Subgroup, coords: Tuple[int, ...]
) -> Tuple[PairHPsi, Tuple[int, ...]]:
    """The pair on a subgroup sitting at given torsor coordinates.

    Coordinates index the trivializations of omega on the subgroup relative
    to a base solution, one per invariant factor of its degree-2 C*
    cohomology; they are reduced modulo the factors.  Returns the pair and
    the reduced coordinates.  Raises NotTrivializing when omega does not
    become a coboundary on the subgroup.
    """
    psi0 = solve_trivialization(ctx.omega, subgroup, ctx.modulus)
    if psi0 is None:
        raise NotTrivializing(
            f"omega does not trivialize on the order-{subgroup.order} subgroup; "
            "no pairs are supported there"
        )
    h2 = cohomology_cstar(subgroup.as_group, 2)
    factors = tuple(h2.invariant_factors)
    if len(coords) != len(factors):
        raise ValueError(
            f"expected {len(factors)} torsor coordinate(s) "
            f"for invariant factors {list(factors)}, got {len(coords)}"
        )
    reduced = tuple(int(t) % f for t, f in zip(coords, factors))
    gens = [b.embed(ctx.modulus) for b in h2.generators]
    return make_pair(ctx, subgroup, _torsor_cochain(psi0, gens, reduced)), reduced


# ---------------------------------------------------------------------------
# fiber functors
# ---------------------------------------------------------------------------


def is_fiber_functor(
    ctx: AmbientContext, base: PairHPsi, candidate: PairHPsi
) -> bool:
    """Does the candidate pair give a rank-one module category over the base?

    Three conditions: the candidate is an actual pair (admissibility holds by
    construction), the two subgroups span a single double coset, and the
    difference of the two cochains is nondegenerate on the intersection.
    """
    if len(double_cosets(ctx.ambient, base.subgroup, candidate.subgroup)) != 1:
        return False
    meet = sorted(set(base.subgroup.elements) & set(candidate.subgroup.elements))
    inside_cand = Subgroup(
        candidate.psi.group, [candidate.subgroup.from_parent[x] for x in meet]
    )
    inside_base = Subgroup(
        base.psi.group, [base.subgroup.from_parent[x] for x in meet]
    )
    diff = restrict(candidate.psi, inside_cand) - restrict(base.psi, inside_base)
    alg = TwistedAlgebra(inside_cand.as_group, diff)
    return projective_irrep_count(alg) == 1


def fiber_functors(
    ctx: DoubleContext, report: Optional[ClassificationReport] = None
) -> List[PairEntry]:
    """Classified pairs whose module category over the double has rank one."""
    if report is None:
        report = classify_pairs(ctx)
    base = diagonal_pair(ctx)
    out = []
    for entry in report.entries:
        for pe in entry.pairs:
            if is_fiber_functor(ctx, base, pe.pair):
                assert pe.breakdown.total == 1  # fiber functor = rank one
                out.append(pe)
    return out


# ---------------------------------------------------------------------------
# independent oracle: simple bimodules on one double coset
# ---------------------------------------------------------------------------


def oracle_simple_bimodules(
    ctx: AmbientContext, left: PairHPsi, right: PairHPsi, g: int
) -> int:
    """Count simple bimodules supported on the double coset of g, from scratch.

    Builds the stabilizer operator algebra j_h = i1_{h,g} ∘ i2_{hg, g^-1 h^-1 g}
    symbolically, normalizing words with the three compatibility rewrite rules
    of the two module structures, and returns the center dimension of the
    resulting structure constants.  Shares no formula with psi_g.
    """
    G = ctx.ambient
    stab, conj_back = _general_stabilizer(G, g, left.subgroup, right.subgroup)
    if stab.order > _ORACLE_COSET_MAX:
        raise SizeBound(
            f"bimodule oracle limited to stabilizers of order {_ORACLE_COSET_MAX}"
        )
    mul, inv = G.mul, G.inv
    om = ctx.omega.values
    f1 = _parent_index(left.subgroup)
    f2 = _parent_index(right.subgroup)
    psi1, psi2 = left.psi.values, right.psi.values

    def rewrite(word: List[Tuple[str, int, int]]) -> Tuple[List[Tuple[str, int, int]], int]:
        word = list(word)
        scalar = 0
        while True:
            for i in range(len(word) - 1):
                a, b = word[i], word[i + 1]
                if a[0] == "i2" and b[0] == "i1":
                    _, x, k = a
                    _, h, src = b
                    assert src == mul[x, k]
                    word[i] = ("i1", int(h), int(x))
                    word[i + 1] = ("i2", int(mul[h, x]), int(k))
                    scalar -= om[h, x, k]
                    break
                if a[0] == "i1" and b[0] == "i1":
                    _, hp, g0 = a
                    _, h, src = b
                    assert src == mul[hp, g0]
                    word[i : i + 2] = [("i1", int(mul[h, hp]), int(g0))]
                    scalar -= om[h, hp, g0] + psi1[f1[h], f1[hp]]
                    break
                if a[0] == "i2" and b[0] == "i2":
                    _, x, k1 = a
                    _, src, k2 = b
                    assert src == mul[x, k1]
                    word[i : i + 2] = [("i2", int(x), int(mul[k1, k2]))]
                    scalar += om[x, k1, k2] - psi2[f2[k1], f2[k2]]
                    break
            else:
                return word, int(scalar % ctx.modulus)

    j_word = {
        h: [("i1", h, g), ("i2", int(mul[h, g]), int(conj_back[inv[h]]))]
        for h in stab.elements
    }
    k = stab.order
    local = {h: i for i, h in enumerate(stab.elements)}
    table = np.zeros((k, k), dtype=np.int64)
    coeffs = np.zeros((k, k), dtype=np.complex128)
    zeta = np.exp(2j * np.pi / ctx.modulus)
    for a in stab.elements:
        for b in stab.elements:
            word, scalar = rewrite(j_word[a] + j_word[b])
            assert len(word) == 2 and word[0][0] == "i1" and word[1][0] == "i2"
            c = word[0][1]
            assert word == j_word[c]  # the product is again one of the j's
            table[local[a], local[b]] = local[c]
            coeffs[local[a], local[b]] = zeta**scalar
    return center_dimension_from_structure(table, coeffs)
