"""Exact phase-one simplex for {A x = b, x >= 0} feasibility.

Pivoting follows Bland's rule, so the method terminates on every input.
Rank-deficient systems are reduced by exact row elimination first; an
inconsistent row short-circuits to Infeasible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import rref
from .scalars import is_zero, sign


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    basic_solution: dict | None = None  # var index -> positive scalar value
    support_size: int = 0

    @property
    def status(self) -> str:
        return "Feasible" if self.feasible else "Infeasible"


INFEASIBLE = FeasibilityResult(False)


def lp_feasible(equalities, rhs) -> FeasibilityResult:
    """Decide feasibility of A x = b, x >= 0, over the exact scalar field.

    On success the result carries a basic feasible solution whose support
    size is at most the row rank of A.
    """
    nvars = len(equalities[0]) if equalities else 0
    rows, b, _, inconsistent = rref(equalities, rhs)
    if inconsistent:
        return INFEASIBLE
    m = len(rows)
    if m == 0:
        return FeasibilityResult(True, {}, 0)

    zero = rows[0][0] - rows[0][0]
    one = zero + 1

    # orient rows so the right-hand side is nonnegative
    tableau = []
    rhs_col = []
    for i in range(m):
        if sign(b[i]) < 0:
            tableau.append([-a for a in rows[i]])
            rhs_col.append(-b[i])
        else:
            tableau.append(list(rows[i]))
            rhs_col.append(b[i])

    # append identity columns for the artificial variables
    for i in range(m):
        for j in range(m):
            tableau[i].append(one if i == j else zero)
    basis = [nvars + i for i in range(m)]

    # phase-one cost row: minimize the sum of artificials.  Reduced costs of
    # the original columns are the negated column sums; artificials cost 0.
    cost = [zero] * (nvars + m)
    for j in range(nvars):
        acc = zero
        for i in range(m):
            acc = acc + tableau[i][j]
        cost[j] = -acc

    def pivot(row, col):
        piv = tableau[row][col]
        inv = one / piv
        tableau[row] = [a * inv for a in tableau[row]]
        rhs_col[row] = rhs_col[row] * inv
        prow = tableau[row]
        for i in range(m):
            if i == row:
                continue
            factor = tableau[i][col]
            if is_zero(factor):
                continue
            tableau[i] = [a - factor * p for a, p in zip(tableau[i], prow)]
            rhs_col[i] = rhs_col[i] - factor * rhs_col[row]
        factor = cost[col]
        if not is_zero(factor):
            for j in range(nvars + m):
                cost[j] = cost[j] - factor * prow[j]
        basis[row] = col

    while True:
        entering = None
        for j in range(nvars):  # artificials never re-enter
            if sign(cost[j]) < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(m):
            a = tableau[i][entering]
            if sign(a) <= 0:
                continue
            ratio = rhs_col[i] / a
            if best_ratio is None:
                best_ratio, leaving = ratio, i
                continue
            cmp = sign(ratio - best_ratio)
            if cmp < 0 or (cmp == 0 and basis[i] < basis[leaving]):
                best_ratio, leaving = ratio, i
        if leaving is None:
            # unbounded phase-one objective cannot happen (bounded below by 0)
            raise AssertionError("phase-one ratio test failed")
        pivot(leaving, entering)

    obj = _objective(rhs_col, basis, nvars, zero)
    if sign(obj) != 0:
        return INFEASIBLE

    # drive any remaining (zero-valued) artificials out of the basis
    for i in range(m):
        if basis[i] >= nvars:
            col = next((j for j in range(nvars) if not is_zero(tableau[i][j])), None)
            # full row rank guarantees a nonzero original entry exists
            assert col is not None
            pivot(i, col)

    solution = {}
    for i in range(m):
        if basis[i] < nvars and not is_zero(rhs_col[i]):
            solution[basis[i]] = rhs_col[i]
    return FeasibilityResult(True, solution, len(solution))


def _objective(rhs_col, basis, nvars, zero):
    obj = zero
    for i, var in enumerate(basis):
        if var >= nvars:
            obj = obj + rhs_col[i]
    return obj
