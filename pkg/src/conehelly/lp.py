"""Exact two-phase simplex over the rationals.

Standard form: minimize c.x subject to A x = b, x >= 0.  Bland's rule
(smallest eligible index enters, smallest basic variable leaves on ratio
ties) guarantees termination, and every number is a Fraction, so the
outcome is a decision, not an estimate.

When the system is infeasible the phase-1 multipliers give a Farkas
vector y with y.A <= 0 componentwise and y.b > 0; callers turn that into
separating-functional certificates.  Problems here are desk scale (tens
of rows and columns), so the dense tableau is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    objective: Fraction | None = None
    farkas: list[Fraction] | None = None  # infeasible case: y.A <= 0, y.b > 0


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = tab[r][c]
    if piv != 1:
        tab[r] = [v / piv for v in tab[r]]
    prow = tab[r]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
    basis[r] = c


def _run_simplex(tab: list[list[Fraction]], basis: list[int], ncols: int) -> str:
    """Iterate Bland pivots on a tableau whose last row is the reduced-cost
    row and last column the rhs.  Returns OPTIMAL or UNBOUNDED."""
    m = len(tab) - 1
    cost = tab[m]
    while True:
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(tab, basis, leave, enter)
        cost = tab[m]


def solve_standard_form(
    a: list[list[Fraction]],
    b: list[Fraction],
    c: list[Fraction],
) -> LPResult:
    """Minimize c.x subject to a x = b, x >= 0, all data rational."""
    m = len(a)
    n = len(c)
    for row in a:
        if len(row) != n:
            raise ValueError("constraint row of wrong length")
    if len(b) != m:
        raise ValueError("rhs of wrong length")

    # Flip rows so the rhs is nonnegative, then start from an artificial basis.
    sign = [(-_ONE if b[i] < 0 else _ONE) for i in range(m)]
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = [sign[i] * v for v in a[i]]
        art = [_ONE if j == i else _ZERO for j in range(m)]
        tab.append(row + art + [sign[i] * b[i]])
    ncols = n + m
    basis = [n + i for i in range(m)]

    # Phase-1 reduced costs: minimize the sum of artificials.
    cost = [_ZERO] * (ncols + 1)
    for i in range(m):
        for j in range(ncols + 1):
            cost[j] -= tab[i][j]
    for i in range(m):
        cost[n + i] = _ZERO
    tab.append(cost)

    status = _run_simplex(tab, basis, ncols)
    assert status == OPTIMAL  # phase 1 is bounded below by 0
    infeas = -tab[m][ncols]
    if infeas > 0:
        # Simplex multipliers off the artificial columns: y_i = 1 - redcost_i,
        # then undo the row flips.  This is the Farkas certificate.
        y = [sign[i] * (_ONE - tab[m][n + i]) for i in range(m)]
        return LPResult(INFEASIBLE, farkas=y)

    # Drive leftover artificials out of the basis; an all-zero row is a
    # redundant constraint and is dropped.
    drop_rows: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            enter = next((j for j in range(n) if tab[i][j] != 0), None)
            if enter is None:
                drop_rows.append(i)
            else:
                _pivot(tab, basis, i, enter)
    if drop_rows:
        for i in reversed(drop_rows):
            del tab[i]
            del basis[i]
        m = len(basis)

    # Slice off artificial columns and install the real objective.
    tab = [row[:n] + [row[ncols]] for row in tab[:m]]
    cost = list(c) + [_ZERO]
    for i in range(m):
        cb = c[basis[i]]
        if cb != 0:
            cost = [x - cb * y for x, y in zip(cost, tab[i])]
    tab.append(cost)

    status = _run_simplex(tab, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [_ZERO] * n
    for i in range(m):
        x[basis[i]] = tab[i][n]
    obj = sum((ci * xi for ci, xi in zip(c, x)), _ZERO)
    return LPResult(OPTIMAL, x=x, objective=obj)


def nonneg_combination(columns: list[list[Fraction]], target: list[Fraction]) -> LPResult:
    """Feasibility of ``sum_i alpha_i columns[i] = target`` with alpha >= 0.

    Column vectors all live in the same dimension as ``target``.  Returns
    an OPTIMAL result whose x is one valid alpha, or an INFEASIBLE result
    carrying the Farkas vector.
    """
    d = len(target)
    n = len(columns)
    a = [[columns[j][i] for j in range(n)] for i in range(d)]
    return solve_standard_form(a, list(target), [_ZERO] * n)
