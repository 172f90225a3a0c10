"""Brute-force oracles, independent of the simplex code path.

Membership in a positive hull is decided here by conic Caratheodory:
b lies in pos(A) iff b is a nonnegative combination of some linearly
independent subset of A, and over an independent subset the coefficients
are unique, so an exact linear solve per subset settles the question.
The determinant bound argument makes this search complete, unlike a
naive integer coefficient grid, which would need entries up to the
Cramer denominators to be sound.
"""

from itertools import combinations

from conehelly.ratlin import VectorSet, rank_of_rows, rref_rows


def _solve_columns(cols, b, d):
    """Unique solution of sum_j alpha_j cols[j] = b when the columns are
    independent; None when inconsistent."""
    n = len(cols)
    aug = [[cols[j][r] for j in range(n)] + [b[r]] for r in range(d)]
    red, piv = rref_rows(aug, n + 1)
    if n in piv or len(piv) != n:
        return None
    return [red[i][n] for i in range(n)]


def oracle_in_pos(b, vs: VectorSet) -> bool:
    d = vs.ambient_dim
    if all(c == 0 for c in b):
        return True
    for size in range(1, d + 1):
        for t in combinations(range(len(vs)), size):
            cols = [vs[i] for i in t]
            if rank_of_rows([list(c) for c in cols], d) < size:
                continue
            sol = _solve_columns(cols, b, d)
            if sol is not None and all(a >= 0 for a in sol):
                return True
    return False


def oracle_reversible(vs: VectorSet) -> tuple[int, ...]:
    """Indices whose negative lies in pos(vs), by exhaustive search."""
    return tuple(i for i, v in enumerate(vs)
                 if oracle_in_pos(tuple(-c for c in v), vs))


def oracle_lineality_dim(vs: VectorSet) -> int:
    members = oracle_reversible(vs)
    return rank_of_rows([list(vs[i]) for i in members], vs.ambient_dim)


def oracle_lineality_contains(vs: VectorSet, w) -> bool:
    """w in lpos(vs): both w and -w in pos(vs)."""
    return oracle_in_pos(w, vs) and oracle_in_pos(tuple(-c for c in w), vs)


def oracle_check_hypothesis(vs: VectorSet, k: int, cap: int) -> bool:
    """Direct subset scan: every subset of size <= cap has oracle
    lineality dimension <= k."""
    n = len(vs)
    for size in range(0, min(cap, n) + 1):
        for t in combinations(range(n), size):
            if oracle_lineality_dim(vs.subset(t)) > k:
                return False
    return True


def oracle_minimal_witness(vs: VectorSet, k: int, cap: int):
    """Lexicographically-first smallest subset with oracle lineality
    dimension above k, scanning sizes ascending; None if none within cap."""
    n = len(vs)
    for size in range(1, min(cap, n) + 1):
        for t in combinations(range(n), size):
            if oracle_lineality_dim(vs.subset(t)) > k:
                return t
    return None
