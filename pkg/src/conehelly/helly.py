"""Helly-type checkers and witness extractors.

Two bounds drive everything.  For a k-dimensional cone inside the
intersection of a halfspace family in dimension d the Helly number is
m(k,d) = max(d+1, 2(d-k+1)); for the lineality dimension of a positive
hull it is h(k,d) = max(d+1, 2(k+1)).  The two are polar to each other:
m(k,d) = h(d-k,d).

Checkers evaluate the subset hypothesis and the global conclusion
independently and, when the conclusion fails, produce a witness subset
whose size the theorems bound.  A witness that cannot be found within its
bound would contradict a proved theorem, so that raises
TheoremContradiction instead of being reported as an ordinary result.

Minimal witnesses have useful structure: a smallest subset B with
dim lpos B > k must satisfy pos B = lin B (every element reversible
inside B, otherwise dropping an irreversible element gives a smaller
witness).  Such "linear" subsets are exactly the unions of positive
circuits, so the enumeration walks bitmasks against the circuit list and
only runs an exact rank on the rare survivors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, TheoremContradiction
from .cone import (
    HalfspaceSystem,
    lineality_of_polar,
    lineality_space,
    max_cone_dim,
    reversible_indices,
    solution_space_rank,
)
from .posbasis import (
    covered_union,
    subset_rank,
    extract_positive_basis_indices,
    positive_circuits,
    reay_partition,
    PositiveBasis,
)
from .ratlin import VectorSet, rank_of_rows

__all__ = [
    "ENUMERATION_CUTOFF",
    "HellyBounds",
    "Witness",
    "bound_m",
    "bound_h",
    "check_lineality_hypothesis",
    "witness_lineality_enum",
    "witness_lineality_reay",
    "verify_cone_helly",
    "corollary_check",
    "check_flat_helly",
    "ConeHellyReport",
    "CorollaryReport",
    "FlatHellyReport",
]

# Subset enumeration is exponential; refuse inputs past desk scale instead
# of silently running forever.
ENUMERATION_CUTOFF = 24


def _check_k(k: int, d: int, lowest: int = 1) -> None:
    if not lowest <= k <= d:
        raise ValueError(f"k must lie in [{lowest}, {d}], got {k}")


def _check_capacity(n: int) -> None:
    if n > ENUMERATION_CUTOFF:
        raise CapacityError(
            f"{n} vectors exceed the enumeration cutoff of {ENUMERATION_CUTOFF}")


def bound_m(k: int, d: int) -> int:
    """Helly number for k-dimensional cones in dimension d."""
    _check_k(k, d)
    return max(d + 1, 2 * (d - k + 1))


def bound_h(k: int, d: int) -> int:
    """Helly number for lineality dimension at most k in dimension d."""
    _check_k(k, d)
    return max(d + 1, 2 * (k + 1))


@dataclass(frozen=True)
class HellyBounds:
    k: int
    d: int
    m: int
    h: int

    def __post_init__(self):
        _check_k(self.k, self.d)
        if self.m != bound_m(self.k, self.d) or self.h != bound_h(self.k, self.d):
            raise ValueError("inconsistent bounds")

    @classmethod
    def of(cls, k: int, d: int) -> "HellyBounds":
        return cls(k=k, d=d, m=bound_m(k, d), h=bound_h(k, d))


@dataclass(frozen=True)
class Witness:
    """A subset certifying failure of a Helly conclusion; its size is
    bounded by the applicable Helly number."""

    subset_indices: tuple[int, ...]
    property: str
    size_bound: int

    def __post_init__(self):
        if len(self.subset_indices) > self.size_bound:
            raise ValueError("witness larger than its size bound")


def _minimal_lineality_witness(a: VectorSet, threshold: int,
                               size_cap: int) -> tuple[int, ...] | None:
    """Lexicographically-first smallest subset B with
    dim lineality_space(B) > threshold and |B| <= size_cap, or None.

    At the minimal cardinality every witness is a linear subset (a union
    of positive circuits), so only those are tested; sizes are scanned in
    ascending order, subsets in index-lexicographic order.
    """
    members = reversible_indices(a)
    if rank_of_rows([list(a[i]) for i in members], a.ambient_dim) <= threshold:
        return None  # dim lpos(a) itself is within the threshold
    circuits = positive_circuits(a)
    top = min(size_cap, len(members))
    for size in range(threshold + 2, top + 1):
        for combo in itertools.combinations(members, size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if covered_union(mask, circuits) != mask:
                continue
            if subset_rank(a, combo) > threshold:
                return combo
    return None


def check_lineality_hypothesis(a: VectorSet, k: int) -> bool:
    """True iff every subset B with |B| <= h(k,d) has lineality dimension
    at most k."""
    _check_k(k, a.ambient_dim)
    _check_capacity(len(a))
    cap = min(bound_h(k, a.ambient_dim), len(a))
    return _minimal_lineality_witness(a, k, cap) is None


def _require_lineality_excess(a: VectorSet, k: int) -> None:
    if lineality_space(a).dim <= k:
        raise ValueError(
            "witness extraction requires lineality dimension above k")


def witness_lineality_enum(a: VectorSet, k: int) -> Witness:
    """Lexicographically-first smallest subset whose lineality dimension
    exceeds k; its size never exceeds h(k,d)."""
    d = a.ambient_dim
    _check_k(k, d)
    _check_capacity(len(a))
    _require_lineality_excess(a, k)
    h = bound_h(k, d)
    combo = _minimal_lineality_witness(a, k, min(h, len(a)))
    if combo is None:
        raise TheoremContradiction(
            "lineality exceeds k but no witness within h(k,d) exists")
    return Witness(subset_indices=combo, property="lineality_dim_exceeds",
                   size_bound=h)


def witness_lineality_reay(a: VectorSet, k: int) -> Witness:
    """Witness read off the Reay partition of a positive basis of the
    lineality space: the first prefix whose span dimension exceeds k."""
    d = a.ambient_dim
    _check_k(k, d)
    _check_capacity(len(a))
    _require_lineality_excess(a, k)
    h = bound_h(k, d)
    kept = extract_positive_basis_indices(a)
    basis = PositiveBasis(target=lineality_space(a), elements=a.subset(kept))
    partition = reay_partition(basis)
    # Positions within the extracted basis follow input order, so prefix
    # parts map straight back to original indices by value matching the
    # kept index list.
    pos_of_vec: dict = {}
    for orig in kept:
        pos_of_vec.setdefault(a[orig], []).append(orig)
    taken: list[int] = []
    used: dict = {}
    for part in partition.parts:
        for v in part:
            options = pos_of_vec[v]
            used[v] = used.get(v, 0)
            taken.append(options[used[v]])
            used[v] += 1
        if rank_of_rows([list(a[i]) for i in taken], d) > k:
            if len(taken) > h:
                raise TheoremContradiction(
                    "Reay prefix witness exceeds h(k,d)")
            return Witness(subset_indices=tuple(sorted(taken)),
                           property="lineality_dim_exceeds", size_bound=h)
    raise TheoremContradiction(
        "no Reay prefix exceeds k although the full lineality does")


@dataclass(frozen=True)
class ConeHellyReport:
    k: int
    d: int
    bounds: HellyBounds
    hypothesis: bool
    conclusion: bool
    max_cone_dim: int
    lineality_dim: int
    witness: Witness | None


def verify_cone_helly(h: HalfspaceSystem, k: int) -> ConeHellyReport:
    """Evaluate both sides of the cone Helly statement on a halfspace
    system: hypothesis (every subfamily of size at most m(k,d) contains a
    k-dimensional cone in its intersection) and conclusion (the whole
    family does).  When the conclusion fails, a witness subfamily within
    the bound is attached; hypothesis true with conclusion false would
    contradict the theorem and raises."""
    d = h.ambient_dim
    _check_k(k, d)
    _check_capacity(len(h))
    bounds = HellyBounds.of(k, d)
    mcd = max_cone_dim(h)
    ldim = lineality_space(h.normals).dim
    conclusion = mcd >= k
    # A subfamily's cone dimension only grows as halfspaces are removed,
    # so the conclusion implies the hypothesis outright; the converse is
    # the theorem.  The witness search decides the hypothesis exactly.
    combo = _minimal_lineality_witness(h.normals, d - k,
                                       min(bounds.m, len(h)))
    hypothesis = combo is None
    if hypothesis and not conclusion:
        raise TheoremContradiction(
            "cone Helly hypothesis holds but conclusion fails")
    if conclusion and not hypothesis:
        raise TheoremContradiction(
            "subfamily witness found although the full family succeeds")
    witness = None
    if combo is not None:
        witness = Witness(subset_indices=combo, property="no_k_dim_cone",
                          size_bound=bounds.m)
    return ConeHellyReport(k=k, d=d, bounds=bounds, hypothesis=hypothesis,
                           conclusion=conclusion, max_cone_dim=mcd,
                           lineality_dim=ldim, witness=witness)


@dataclass(frozen=True)
class CorollaryReport:
    k: int
    d: int
    bounds: HellyBounds
    rank: int
    global_holds: bool
    subsystems_hold: bool
    witness: Witness | None


def corollary_check(h: HalfspaceSystem, k: int) -> CorollaryReport:
    """Biconditional for homogeneous inequality systems: the system has at
    least k linearly independent solutions iff every subsystem of size at
    most m(k,d) does."""
    d = h.ambient_dim
    _check_k(k, d)
    _check_capacity(len(h))
    bounds = HellyBounds.of(k, d)
    r = solution_space_rank(h)
    global_holds = r >= k
    combo = _minimal_lineality_witness(h.normals, d - k,
                                       min(bounds.m, len(h)))
    subsystems_hold = combo is None
    if global_holds != subsystems_hold:
        raise TheoremContradiction("corollary biconditional failed")
    witness = None
    if combo is not None:
        witness = Witness(subset_indices=combo, property="solution_rank_below_k",
                          size_bound=bounds.m)
    return CorollaryReport(k=k, d=d, bounds=bounds, rank=r,
                           global_holds=global_holds,
                           subsystems_hold=subsystems_hold, witness=witness)


@dataclass(frozen=True)
class FlatHellyReport:
    k: int
    d: int
    polar_lineality_dim: int
    normal_rank: int
    subspace_conclusion: bool
    all_small_subsets_dependent: bool
    witness: Witness | None


def check_flat_helly(h: HalfspaceSystem, k: int) -> FlatHellyReport:
    """Subspace version with Helly number k+1: the intersection contains a
    subspace of dimension d-k iff every k+1 outer normals are linearly
    dependent.  k = 0 is allowed and trivial."""
    d = h.ambient_dim
    _check_k(k, d, lowest=0)
    _check_capacity(len(h))
    polar_dim = lineality_of_polar(h).dim
    conclusion = polar_dim >= d - k
    witness = None
    all_dependent = True
    for combo in itertools.combinations(range(len(h)), k + 1):
        if rank_of_rows([list(h.normals[i]) for i in combo], d) == k + 1:
            all_dependent = False
            witness = Witness(subset_indices=combo,
                              property="independent_normals",
                              size_bound=k + 1)
            break
    if conclusion != all_dependent:
        raise TheoremContradiction(
            "polar lineality dimension disagrees with normal rank")
    rank_n = rank_of_rows([list(v) for v in h.normals], d)
    return FlatHellyReport(k=k, d=d, polar_lineality_dim=polar_dim,
                           normal_rank=rank_n,
                           subspace_conclusion=conclusion,
                           all_small_subsets_dependent=all_dependent,
                           witness=witness)
