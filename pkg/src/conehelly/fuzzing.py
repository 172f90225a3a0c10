"""Seeded fuzz driver: random instances run against every Helly property.

Each trial draws one integer vector set and checks, with exact
arithmetic, every theorem-backed invariant the library promises.  A
failure here is a bug by definition (the theorems are proved), so the
driver records the offending instance verbatim for replay.

Trial derivation is deterministic and shardable: the per-trial seed is
the i-th output of SplitMix64(seed), and everything inside a trial
depends only on that seed, so workers keyed by trial index would merge
into the same summary.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cone import (
    HalfspaceSystem,
    InfeasibleCone,
    extract_cone,
    lineality_space,
    max_cone_dim,
    membership,
    project_out_lineality,
    relative_interior_point,
    solution_space_rank,
    verify_cone_generators,
)
from .gens import SplitMix64, gen_random
from .helly import (
    bound_h,
    check_lineality_hypothesis,
    corollary_check,
    verify_cone_helly,
    witness_lineality_enum,
    witness_lineality_reay,
)
from .posbasis import extract_positive_basis, reay_partition, verify_reay
from .ratlin import VectorSet, vneg

__all__ = [
    "ALL_CHECKS",
    "FuzzConfig",
    "FuzzFailure",
    "FuzzSummary",
    "trial_instance",
    "run_trial_checks",
    "run_fuzz",
]

ALL_CHECKS = ("lineality", "pos_helly", "posbasis", "cone_helly", "corollary")


@dataclass(frozen=True)
class FuzzConfig:
    d_max: int
    n_max: int
    bound: int
    trials: int
    seed: int
    checks: tuple[str, ...] = ALL_CHECKS

    def __post_init__(self):
        if min(self.d_max, self.n_max, self.bound) < 1 or self.trials < 0:
            raise ValueError("d_max, n_max, bound must be positive; trials >= 0")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass(frozen=True)
class FuzzFailure:
    trial: int
    trial_seed: int
    check: str
    message: str
    d: int
    vectors: tuple


@dataclass
class FuzzSummary:
    config: FuzzConfig
    trials_run: int = 0
    checks_passed: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    reay_bases: int = 0
    reay_max_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def trial_instance(config: FuzzConfig, index: int) -> tuple[int, VectorSet]:
    """(trial seed, instance) for one trial index."""
    base = SplitMix64(config.seed)
    for _ in range(index):
        base.next_u64()
    trial_seed = base.next_u64()
    rng = SplitMix64(trial_seed)
    d = rng.next_in_range(1, config.d_max)
    n = rng.next_in_range(1, config.n_max)
    vs = gen_random(d, n, config.bound, rng.next_u64())
    return trial_seed, vs


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def check_lineality(vs: VectorSet) -> None:
    """Certify the lineality space: +-every basis vector is a verified
    membership combination and the projected set is pointed."""
    ls = lineality_space(vs)
    for w in ls.basis:
        _require(membership(w, vs).is_member, "basis vector outside pos")
        _require(membership(vneg(w), vs).is_member, "basis vector not reversible")
    projected = project_out_lineality(vs)
    _require(lineality_space(projected).dim == 0, "projected set not pointed")


def check_pos_helly(vs: VectorSet) -> None:
    """Lineality Helly statement for every k: hypothesis iff conclusion,
    and both witness extractors deliver bounded, valid witnesses whenever
    the conclusion fails."""
    d = vs.ambient_dim
    ldim = lineality_space(vs).dim
    for k in range(1, d + 1):
        hyp = check_lineality_hypothesis(vs, k)
        conc = ldim <= k
        _require(hyp == conc, f"hypothesis/conclusion mismatch at k={k}")
        if conc:
            continue
        h = bound_h(k, d)
        for name, witness in (
            ("enum", witness_lineality_enum(vs, k)),
            ("reay", witness_lineality_reay(vs, k)),
        ):
            ids = witness.subset_indices
            _require(len(ids) <= h, f"{name} witness exceeds h(k,d) at k={k}")
            _require(
                lineality_space(vs.subset(ids)).dim > k,
                f"{name} witness does not violate the bound at k={k}",
            )
        enum_size = len(witness_lineality_enum(vs, k).subset_indices)
        reay_size = len(witness_lineality_reay(vs, k).subset_indices)
        _require(enum_size <= reay_size,
                 f"enumerative witness larger than Reay witness at k={k}")


def check_posbasis(vs: VectorSet) -> float:
    """Positive-basis extraction and Reay partition; returns the seconds
    spent in the partition search."""
    pb = extract_positive_basis(vs)  # construction re-certifies
    m = pb.target.dim
    if m == 0:
        _require(len(pb) == 0, "nonempty basis of the zero subspace")
    else:
        _require(m + 1 <= len(pb) <= 2 * m, "positive basis size out of range")
    t0 = time.perf_counter()
    partition = reay_partition(pb)
    dt = time.perf_counter() - t0
    _require(verify_reay(partition), "Reay partition failed verification")
    union = sorted(partition.union().vectors)
    _require(union == sorted(pb.elements.vectors),
             "partition does not cover the basis")
    return dt


def check_cone_helly(vs: VectorSet) -> None:
    """Halfspace-side properties: the duality identity, certified cone
    extraction at the maximal dimension, infeasibility just above it, and
    the cone Helly report for every k."""
    h = HalfspaceSystem(vs)
    d = h.ambient_dim
    mcd = max_cone_dim(h)
    _require(mcd + lineality_space(vs).dim == d, "duality identity broken")
    gens = extract_cone(h, mcd)
    _require(isinstance(gens, VectorSet), "extraction failed at feasible k")
    _require(verify_cone_generators(h, gens, mcd), "extracted cone invalid")
    if mcd < d:
        _require(isinstance(extract_cone(h, mcd + 1), InfeasibleCone),
                 "extraction beyond the maximum did not report infeasible")
    relative_interior_point(h)  # self-asserting
    for k in range(1, d + 1):
        rep = verify_cone_helly(h, k)
        _require(rep.conclusion == (mcd >= k), "conclusion flag wrong")
        _require(rep.hypothesis == rep.conclusion,
                 f"cone Helly hypothesis/conclusion mismatch at k={k}")
        if rep.witness is not None:
            ids = rep.witness.subset_indices
            _require(len(ids) <= rep.bounds.m, "cone witness exceeds m(k,d)")
            _require(max_cone_dim(h.subsystem(ids)) < k,
                     "cone witness subfamily still contains a k-cone")


def check_corollary(vs: VectorSet) -> None:
    """Independent-solution biconditional for every k."""
    h = HalfspaceSystem(vs)
    d = h.ambient_dim
    r = solution_space_rank(h)
    _require(r == max_cone_dim(h), "solution rank disagrees with cone dim")
    for k in range(1, d + 1):
        rep = corollary_check(h, k)
        _require(rep.rank == r, "reported rank drifted")
        _require(rep.global_holds == (r >= k), "global flag wrong")
        _require(rep.global_holds == rep.subsystems_hold,
                 f"corollary biconditional mismatch at k={k}")
        if rep.witness is not None:
            sub = h.subsystem(rep.witness.subset_indices)
            _require(solution_space_rank(sub) < k,
                     "corollary witness subsystem still has rank k")


_CHECK_FUNCS = {
    "lineality": check_lineality,
    "pos_helly": check_pos_helly,
    "posbasis": check_posbasis,
    "cone_helly": check_cone_helly,
    "corollary": check_corollary,
}


def run_trial_checks(vs: VectorSet, checks=ALL_CHECKS) -> dict:
    """Run the named checks on one instance; returns {check: seconds or
    None}.  Raises CheckFailed on the first violated property."""
    out = {}
    for name in checks:
        out[name] = _CHECK_FUNCS[name](vs)
    return out


def run_fuzz(config: FuzzConfig) -> FuzzSummary:
    summary = FuzzSummary(config=config,
                          checks_passed={name: 0 for name in config.checks})
    base = SplitMix64(config.seed)
    for trial in range(config.trials):
        trial_seed = base.next_u64()
        rng = SplitMix64(trial_seed)
        d = rng.next_in_range(1, config.d_max)
        n = rng.next_in_range(1, config.n_max)
        vs = gen_random(d, n, config.bound, rng.next_u64())
        summary.trials_run += 1
        for name in config.checks:
            try:
                res = _CHECK_FUNCS[name](vs)
            except Exception as exc:  # record and continue; replay comes later
                summary.failures.append(FuzzFailure(
                    trial=trial, trial_seed=trial_seed, check=name,
                    message=f"{type(exc).__name__}: {exc}", d=vs.ambient_dim,
                    vectors=tuple(tuple(int(c) if c.denominator == 1 else str(c)
                                        for c in v) for v in vs),
                ))
                continue
            summary.checks_passed[name] += 1
            if name == "posbasis" and isinstance(res, float):
                summary.reay_bases += 1
                summary.reay_max_seconds = max(summary.reay_max_seconds, res)
    return summary
