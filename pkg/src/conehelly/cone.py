"""Polyhedral cone primitives.

The positive hull of a finite vector set A is ``pos A``, the set of all
nonnegative combinations of A.  Everything downstream needs three exact
questions answered about it:

* membership: is b in pos A?  Decided by phase-1 simplex; the answer is
  returned as a :class:`FarkasCertificate` that re-verifies by plain
  substitution, so callers never have to trust the solver.
* the lineality space: the largest linear subspace inside pos A, computed
  as the span of the generators whose negatives are members.
* polar quantities of a homogeneous halfspace system {x : a.x <= 0}: the
  largest dimension of a cone inside the intersection, a relative
  interior point, and an explicit k-dimensional cone when one exists.

All cones have apex at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lp
from .errors import TheoremContradiction
from .ratlin import (
    RationalMatrix,
    SubspaceBasis,
    Vec,
    VectorSet,
    dot,
    is_zero,
    kernel_basis,
    orth_complement,
    span_basis,
    vadd,
    vneg,
    vscale,
    zero_vec,
    rank_of_rows,
)

__all__ = [
    "FarkasCertificate",
    "HalfspaceSystem",
    "InfeasibleCone",
    "membership",
    "lineality_space",
    "reversible_indices",
    "is_pointed",
    "project_out_lineality",
    "max_cone_dim",
    "implicit_normal_indices",
    "relative_interior_point",
    "extract_cone",
    "verify_cone_generators",
    "solution_space_rank",
    "lineality_of_polar",
]


@dataclass(frozen=True)
class FarkasCertificate:
    """Mutually exclusive proof for a membership query b in pos A.

    Either ``combination`` holds pairs (generator index, coefficient >= 0)
    with sum(coeff * generator) == b exactly, or ``separator`` holds a
    functional y with y.a <= 0 for every generator and y.b > 0.
    """

    combination: tuple[tuple[int, Fraction], ...] | None = None
    separator: Vec | None = None

    def __post_init__(self):
        if (self.combination is None) == (self.separator is None):
            raise ValueError("exactly one of combination/separator must be set")

    @property
    def is_member(self) -> bool:
        return self.combination is not None


@dataclass(frozen=True)
class HalfspaceSystem:
    """Finite system of homogeneous halfspaces {x : a.x <= 0}, one per
    outer normal.  Zero normals are rejected; duplicates are harmless."""

    normals: VectorSet

    def __post_init__(self):
        for i, a in enumerate(self.normals):
            if is_zero(a):
                raise ValueError(f"zero outer normal at index {i}")

    @property
    def ambient_dim(self) -> int:
        return self.normals.ambient_dim

    def __len__(self) -> int:
        return len(self.normals)

    def subsystem(self, indices) -> "HalfspaceSystem":
        return HalfspaceSystem(self.normals.subset(indices))


def membership(b: Vec, gens: VectorSet) -> FarkasCertificate:
    """Decide b in pos(gens) and return a certificate either way.

    The phase-1 simplex answer is re-verified by substitution before it is
    returned; a verification failure raises TheoremContradiction since it
    can only come from a solver bug.
    """
    if len(b) != gens.ambient_dim:
        raise ValueError("query point has wrong dimension")
    res = lp.nonneg_combination([list(v) for v in gens.vectors], list(b))
    if res.status == lp.OPTIMAL:
        assert res.x is not None
        comb = tuple((i, c) for i, c in enumerate(res.x) if c != 0)
        total = zero_vec(gens.ambient_dim)
        for i, c in comb:
            if c < 0:
                raise TheoremContradiction("negative coefficient from phase-1 simplex")
            total = vadd(total, vscale(c, gens[i]))
        if total != tuple(b):
            raise TheoremContradiction("combination certificate failed substitution")
        return FarkasCertificate(combination=comb)
    assert res.farkas is not None
    y = tuple(res.farkas)
    if any(dot(y, a) > 0 for a in gens) or dot(y, b) <= 0:
        raise TheoremContradiction("separator certificate failed substitution")
    return FarkasCertificate(separator=y)


@lru_cache(maxsize=4096)
def reversible_indices(gens: VectorSet) -> tuple[int, ...]:
    """Indices i with -gens[i] in pos(gens); these generators span the
    lineality space."""
    return tuple(
        i for i, v in enumerate(gens) if membership(vneg(v), gens).is_member
    )


def lineality_space(gens: VectorSet) -> SubspaceBasis:
    """Largest linear subspace contained in pos(gens).

    Computed as the span of the reversible generators; the invariant test
    suite certifies each output against the defining intersection
    pos A and -pos A, so the characterization is checked, not trusted.
    """
    return span_basis(gens.subset(reversible_indices(gens)))


def is_pointed(gens: VectorSet) -> bool:
    return lineality_space(gens).dim == 0


def project_out_lineality(gens: VectorSet) -> VectorSet:
    """Project the generators onto the orthogonal complement of their own
    lineality space and drop zero images; the result is pointed."""
    from .ratlin import project_onto_complement

    ls = lineality_space(gens)
    if ls.dim == 0:
        return gens
    images = [project_onto_complement(ls, v) for v in gens]
    return VectorSet(gens.ambient_dim, tuple(v for v in images if not is_zero(v)))


def max_cone_dim(h: HalfspaceSystem) -> int:
    """Largest k such that the intersection of the halfspaces contains a
    k-dimensional cone: the codimension of the lineality space of the
    positive hull of the outer normals."""
    return h.ambient_dim - lineality_space(h.normals).dim


def implicit_normal_indices(h: HalfspaceSystem) -> tuple[int, ...]:
    """Normals a with a.x = 0 on every feasible point, i.e. the normals
    lying in the lineality space of pos(normals)."""
    ls = lineality_space(h.normals)
    return tuple(i for i, a in enumerate(h.normals) if ls.contains(a))


def relative_interior_point(h: HalfspaceSystem) -> Vec:
    """A point x0 with a.x0 = 0 for every implicit normal and a.x0 < 0
    strictly for every other normal, lying in the orthogonal complement of
    the lineality space of the normals.  The zero vector when every normal
    is implicit.

    Found by maximizing t subject to a.x <= -t over the non-implicit
    normals, t <= 1, with x expressed in a basis of the complement.
    """
    d = h.ambient_dim
    ls = lineality_space(h.normals)
    implicit = set(implicit_normal_indices(h))
    active = [a for i, a in enumerate(h.normals) if i not in implicit]
    if not active:
        return zero_vec(d)
    u = orth_complement(ls).basis
    m = len(u)
    # Variables: p (m), q (m) with x = sum (p_j - q_j) u_j, then t, then one
    # slack per row (t <= 1 first, one per active normal).
    nrows = 1 + len(active)
    nvars = 2 * m + 1 + nrows
    zero = Fraction(0)
    one = Fraction(1)
    rows: list[list[Fraction]] = []
    b: list[Fraction] = []
    trow = [zero] * nvars
    trow[2 * m] = one
    trow[2 * m + 1] = one
    rows.append(trow)
    b.append(one)
    for r, a in enumerate(active):
        g = [dot(a, uj) for uj in u]
        row = g + [-x for x in g] + [one] + [zero] * nrows
        row[2 * m + 1 + 1 + r] = one
        rows.append(row)
        b.append(zero)
    cost = [zero] * nvars
    cost[2 * m] = -one
    res = lp.solve_standard_form(rows, b, cost)
    if res.status != lp.OPTIMAL or res.x is None:
        raise TheoremContradiction("interior-point program must be solvable")
    t = res.x[2 * m]
    if t <= 0:
        raise TheoremContradiction(
            "interior-point program returned t <= 0; a non-implicit normal "
            "behaved as an implicit equality")
    x0 = zero_vec(d)
    for j in range(m):
        cj = res.x[j] - res.x[m + j]
        if cj != 0:
            x0 = vadd(x0, vscale(cj, u[j]))
    for i, a in enumerate(h.normals):
        s = dot(a, x0)
        if i in implicit:
            if s != 0:
                raise TheoremContradiction("implicit normal not orthogonal to x0")
        elif s >= 0:
            raise TheoremContradiction("x0 fails strict feasibility")
    return x0


@dataclass(frozen=True)
class InfeasibleCone:
    """Obstruction returned when no k-dimensional cone fits inside the
    intersection: the lineality dimension of the normals caps the cone
    dimension at ambient_dim - lineality_dim."""

    requested_k: int
    max_dim: int
    lineality_dim: int


def extract_cone(h: HalfspaceSystem, k: int) -> VectorSet | InfeasibleCone:
    """Explicit generators of a k-dimensional cone inside the intersection
    of the halfspaces, or the dimension obstruction if none exists.

    Construction: take the relative interior point x0, extend it (or start
    fresh when x0 = 0) to a basis u_1..u_k of the complement of the
    lineality space, and fatten x0 by a small rational step eps along each
    u_i chosen so every inequality still holds.
    """
    d = h.ambient_dim
    if not 0 <= k <= d:
        raise ValueError(f"k must lie in [0, {d}], got {k}")
    ls = lineality_space(h.normals)
    mdim = d - ls.dim
    if k > mdim:
        return InfeasibleCone(requested_k=k, max_dim=mdim, lineality_dim=ls.dim)
    if k == 0:
        return VectorSet(d, ())
    complement = orth_complement(ls).basis
    x0 = relative_interior_point(h)
    if is_zero(x0):
        gens = complement[:k]
        return VectorSet(d, tuple(gens))
    # Basis of the complement that starts with x0, extended greedily in
    # the canonical complement order.
    u: list[Vec] = [x0]
    for cand in complement:
        if len(u) == k:
            break
        if rank_of_rows([list(v) for v in u] + [list(cand)], d) > len(u):
            u.append(cand)
    implicit = set(implicit_normal_indices(h))
    active = [a for i, a in enumerate(h.normals) if i not in implicit]
    bound: Fraction | None = None
    for a in active:
        ax0 = dot(a, x0)
        for ui in u:
            aui = dot(a, ui)
            if aui > 0:
                cand = -ax0 / aui
                if bound is None or cand < bound:
                    bound = cand
    eps = bound / 2 if bound is not None else Fraction(1)
    gens = [x0] + [vadd(x0, vscale(eps, ui)) for ui in u]
    return VectorSet(d, tuple(g for g in gens if not is_zero(g)))


def verify_cone_generators(h: HalfspaceSystem, gens: VectorSet, k: int) -> bool:
    """Independent check of an extract_cone answer: the generators span
    exactly k dimensions and satisfy every inequality exactly."""
    if rank_of_rows([list(v) for v in gens.vectors], gens.ambient_dim) != k:
        return False
    return all(dot(a, g) <= 0 for a in h.normals for g in gens)


def solution_space_rank(h: HalfspaceSystem) -> int:
    """Maximum number of linearly independent solutions of the system
    {a.x <= 0}; coincides with max_cone_dim since the solution set is a
    full-dimensional cone in the complement of the normals' lineality
    space.  extract_cone at this k produces explicit such solutions."""
    return max_cone_dim(h)


def lineality_of_polar(h: HalfspaceSystem) -> SubspaceBasis:
    """Largest subspace contained in the intersection of the halfspaces:
    the kernel of the normal matrix, {x : a.x = 0 for all normals a}."""
    return kernel_basis(RationalMatrix(h.normals.vectors, h.ambient_dim))
