"""Check the engine output against the bundled reference tables.

The reference file pins, for the symmetric-group-on-three-letters square:
the subgroup census with degree-2 C* cohomology, orbit/rank tables, pair and
admissibility counts for every twist, dual ranks, and fiber-functor data.
Class labels are tied to explicit generator sets, so any group isomorphic to
the reference base can be checked after transporting along an isomorphism.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional

import numpy as np

from .cohomology import small_generating_set
from .errors import BadGroupSpec
from .groups import (
    FiniteGroup,
    Subgroup,
    closure,
    group_from_spec,
    subgroups_up_to_conjugacy,
)
from .modcat import (
    DoubleContext,
    bimodule_rank,
    classify_pairs,
    double_context,
    fiber_functors,
)

__all__ = [
    "CheckItem",
    "CheckSection",
    "load_reference",
    "find_isomorphism",
    "census_labels",
    "verify_reference_tables",
]


def load_reference() -> dict:
    with resources.files("tdmc.data").joinpath("s3_reference.json").open() as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# identifying groups with the reference base
# ---------------------------------------------------------------------------


def find_isomorphism(A: FiniteGroup, B: FiniteGroup) -> Optional[List[int]]:
    """An isomorphism A -> B as an image list, or None.

    Brute search over generator images filtered by element order; fine for
    the tiny groups the reference tables talk about.
    """
    if A.order != B.order:
        return None
    gens = small_generating_set(A)
    candidates = [
        [b for b in range(B.order) if B.element_order(b) == A.element_order(g)]
        for g in gens
    ]
    for images in itertools.product(*candidates):
        phi = _extend_homomorphism(A, B, gens, list(images))
        if phi is not None:
            return phi
    return None


def _extend_homomorphism(
    A: FiniteGroup, B: FiniteGroup, gens: List[int], images: List[int]
) -> Optional[List[int]]:
    phi = [-1] * A.order
    phi[0] = 0
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g, img in zip(gens, images):
            y = A.times(x, g)
            want = B.times(phi[x], img)
            if phi[y] == -1:
                phi[y] = want
                frontier.append(y)
            elif phi[y] != want:
                return None
    if -1 in phi or len(set(phi)) != A.order:
        return None
    p = np.array(phi, dtype=np.int64)
    if not np.array_equal(p[A.mul], B.mul[np.ix_(p, p)]):
        return None
    return phi


def _is_conjugate_to(GG: FiniteGroup, elements: List[int], rep: Subgroup) -> bool:
    arr = np.array(elements, dtype=np.int64)
    want = set(rep.elements)
    for t in range(GG.order):
        moved = GG.mul[GG.mul[t, arr], GG.inv[t]]
        if {int(x) for x in moved} == want:
            return True
    return False


def census_labels(ctx: DoubleContext) -> Optional[Dict[int, str]]:
    """Census index -> reference label, or None when the base doesn't match.

    Reference generator sets are transported through an isomorphism from the
    reference base group, closed up, and matched to census classes up to
    conjugacy; the assignment must come out a bijection.
    """
    data = load_reference()
    builtin = group_from_spec(data["group"])
    phi = find_isomorphism(builtin, ctx.base)
    if phi is None:
        return None
    b = builtin.order
    n = ctx.base.order
    GG = ctx.ambient
    census = subgroups_up_to_conjugacy(GG)
    assignment: Dict[int, str] = {}
    for label, info in sorted(data["classes"].items()):
        mapped = [phi[g // b] * n + phi[g % b] for g in info["generators"]]
        target = closure(GG, mapped)
        found = None
        for ci, cls in enumerate(census):
            if cls.rep.order == len(target) and _is_conjugate_to(GG, target, cls.rep):
                found = ci
                break
        assert found is not None, f"reference class {label} missing from census"
        assert found not in assignment, f"two labels match census class {found}"
        assignment[found] = label
    assert len(assignment) == len(census), "census has classes the reference lacks"
    return assignment


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------


@dataclass
class CheckItem:
    label: str
    passed: bool
    detail: str


@dataclass
class CheckSection:
    name: str
    items: List[CheckItem]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


def _item(label: str, got, want) -> CheckItem:
    if got == want:
        return CheckItem(label, True, f"{got}")
    return CheckItem(label, False, f"expected {want}, got {got}")


def verify_reference_tables(
    base: Optional[FiniteGroup] = None, data: Optional[dict] = None
) -> List[CheckSection]:
    """Run every reference check; one CheckItem per table entry.

    `data` overrides the bundled tables (used to prove a perturbed table
    actually fails).
    """
    if data is None:
        data = load_reference()
    if base is None:
        base = group_from_spec(data["group"])
    ctx0 = double_context(base, 0)
    labels = census_labels(ctx0)
    if labels is None:
        raise BadGroupSpec(
            f"reference tables describe {data['group']}; "
            f"the given order-{base.order} group is not isomorphic to it"
        )
    reports = {0: classify_pairs(ctx0)}
    contexts = {0: ctx0}
    for k in range(1, 6):
        contexts[k] = double_context(base, k)
        reports[k] = classify_pairs(contexts[k])

    sections: List[CheckSection] = []

    # census: class count, orders, degree-2 C* cohomology
    items = [_item("class count", reports[0].census_size, len(data["classes"]))]
    for entry in reports[0].entries:
        label = labels[entry.index]
        info = data["classes"][label]
        items.append(
            _item(
                f"{label} order/h2",
                (entry.subgroup.order, list(entry.h2_factors)),
                (info["order"], info["h2"]),
            )
        )
    sections.append(CheckSection("subgroup census", items))

    # untwisted orbit and rank table
    items = []
    for entry in reports[0].entries:
        label = labels[entry.index]
        info = data["classes"][label]
        got = sorted(
            {(len(pe.breakdown.rows), pe.breakdown.total) for pe in entry.pairs}
        )
        items.append(
            _item(
                f"{label} orbits/rank",
                got,
                [(info["double_cosets"], info["rank"])],
            )
        )
    sections.append(CheckSection("orbit and rank table", items))

    # admissibility and pair counts for every twist
    items = []
    for k in range(6):
        key = str(min(k, 6 - k) if k else 0)
        want_labels = sorted(data["admissible"][key])
        got_labels = sorted(labels[i] for i in reports[k].admissible_indices)
        items.append(_item(f"k={k} admissible classes", got_labels, want_labels))
        items.append(
            _item(f"k={k} pair count", reports[k].total_pairs, data["pair_counts"][key])
        )
    sections.append(CheckSection("admissibility and pair counts", items))

    # dual ranks, untwisted
    items = []
    for entry in reports[0].entries:
        label = labels[entry.index]
        want = data["classes"][label]["dual_ranks"]
        got = [
            bimodule_rank(ctx0, pe.pair, pe.pair).total for pe in entry.pairs
        ]
        items.append(_item(f"{label} dual ranks", got, want))
    sections.append(CheckSection("dual ranks", items))

    # fiber functors
    items = []
    ff0 = fiber_functors(ctx0, reports[0])
    ff_ids = {id(pe) for pe in ff0}
    got0 = sorted(
        labels[e.index]
        for e in reports[0].entries
        for pe in e.pairs
        if id(pe) in ff_ids
    )
    items.append(_item("untwisted classes", got0, sorted(data["fiber_functors"]["0"])))
    items.append(
        _item(
            "untwisted cochain coordinates",
            [pe.coords for pe in ff0],
            [()] * len(data["fiber_functors"]["0"]),
        )
    )
    for k in range(1, 6):
        count = len(fiber_functors(contexts[k], reports[k]))
        items.append(_item(f"k={k} count", count, data["fiber_functors"]["twisted"]))
    sections.append(CheckSection("fiber functors", items))

    return sections
