# coding=utf-8

"""Exact rational linear programming.

A dense two-phase tableau simplex over `fractions.Fraction` using Bland's
rule, which guarantees termination without any tolerance. Problems are
stated over nonnegative variables:

    maximize    c . x
    subject to  A_eq x  = b_eq
                A_ub x <= b_ub
                x >= 0
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from tractrank.exceptions import TagMismatch

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Row = Sequence


@dataclass
class LinearProgram:
    """A linear program over nonnegative variables."""

    variables: int
    objective: Optional[Sequence] = None
    equalities: List = field(default_factory=list)
    inequalities: List = field(default_factory=list)

    def add_equality(self, coefficients: Row, rhs) -> None:
        """Add `coefficients . x == rhs`."""
        self._check(coefficients)
        self.equalities.append((list(coefficients), rhs))

    def add_inequality(self, coefficients: Row, rhs) -> None:
        """Add `coefficients . x <= rhs`."""
        self._check(coefficients)
        self.inequalities.append((list(coefficients), rhs))

    def add_lower_bound(self, coefficients: Row, rhs) -> None:
        """Add `coefficients . x >= rhs`."""
        self.add_inequality([-Fraction(c) for c in coefficients], -Fraction(rhs))

    def _check(self, coefficients: Row) -> None:
        if len(coefficients) != self.variables:
            raise TagMismatch(
                f"Constraint has {len(coefficients)} coefficients, "
                f"expected {self.variables}."
            )


@dataclass
class Solution:
    """Outcome of a linear program."""

    status: str
    point: Optional[List[Fraction]] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        """Whether a feasible point exists."""
        return self.status != INFEASIBLE


class _Tableau:
    """Simplex tableau in canonical form with an explicit basis."""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, row: int, column: int) -> None:
        pivot_row = self.rows[row]
        factor = pivot_row[column]
        if factor != 1:
            self.rows[row] = pivot_row = [value / factor for value in pivot_row]
            self.rhs[row] = self.rhs[row] / factor
        for index, other in enumerate(self.rows):
            if index == row:
                continue
            scale = other[column]
            if scale:
                self.rows[index] = [a - scale * b for a, b in zip(other, pivot_row)]
                self.rhs[index] = self.rhs[index] - scale * self.rhs[row]
        self.basis[row] = column

    def reduced_costs(self, costs: List[Fraction], columns) -> List[Fraction]:
        reduced = list(costs)
        for row, basic in enumerate(self.basis):
            weight = costs[basic]
            if weight:
                values = self.rows[row]
                for column in columns:
                    reduced[column] -= weight * values[column]
        return reduced

    def optimize(self, costs: List[Fraction], columns) -> bool:
        """Maximize `costs` over the allowed columns. False when unbounded."""
        columns = sorted(columns)
        while True:
            reduced = self.reduced_costs(costs, columns)
            entering = next(
                (
                    column
                    for column in columns
                    if reduced[column] > 0 and column not in self.basis
                ),
                None,
            )
            if entering is None:
                return True
            leaving = None
            best = None
            for row, values in enumerate(self.rows):
                if values[entering] > 0:
                    ratio = self.rhs[row] / values[entering]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[row] < self.basis[leaving])
                    ):
                        best = ratio
                        leaving = row
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def value_of(self, column: int) -> Fraction:
        for row, basic in enumerate(self.basis):
            if basic == column:
                return self.rhs[row]
        return Fraction(0)


def solve(program: LinearProgram) -> Solution:
    """Solve a linear program exactly.

    Without an objective the program is a feasibility problem and the first
    feasible basic solution found by phase one is returned.

    :param program: The linear program.
    :return: The solution status, point and objective value.
    """
    n = program.variables
    constraints = []
    for coefficients, rhs in program.equalities:
        constraints.append(([Fraction(c) for c in coefficients], Fraction(rhs), None))
    for slack, (coefficients, rhs) in enumerate(program.inequalities):
        constraints.append(([Fraction(c) for c in coefficients], Fraction(rhs), slack))
    slacks = len(program.inequalities)
    artificials = len(constraints)
    width = n + slacks + artificials

    rows, rhs, basis = [], [], []
    for index, (coefficients, value, slack) in enumerate(constraints):
        row = coefficients + [Fraction(0)] * (slacks + artificials)
        if slack is not None:
            row[n + slack] = Fraction(1)
        if value < 0:
            row = [-entry for entry in row]
            value = -value
        row[n + slacks + index] = Fraction(1)
        rows.append(row)
        rhs.append(value)
        basis.append(n + slacks + index)
    tableau = _Tableau(rows, rhs, basis)

    # Phase one: maximize the negated sum of the artificial variables.
    phase_one = [Fraction(0)] * (n + slacks) + [Fraction(-1)] * artificials
    tableau.optimize(phase_one, range(width))
    if sum(tableau.value_of(n + slacks + a) for a in range(artificials)) > 0:
        return Solution(INFEASIBLE)

    structural = n + slacks
    for row in range(len(tableau.rows) - 1, -1, -1):
        if tableau.basis[row] < structural:
            continue
        column = next(
            (c for c in range(structural) if tableau.rows[row][c] != 0), None
        )
        if column is None:
            del tableau.rows[row]
            del tableau.rhs[row]
            del tableau.basis[row]
        else:
            tableau.pivot(row, column)

    value = None
    if program.objective is not None:
        costs = [Fraction(c) for c in program.objective]
        costs += [Fraction(0)] * (width - n)
        if not tableau.optimize(costs, range(structural)):
            return Solution(UNBOUNDED)
    point = [tableau.value_of(column) for column in range(n)]
    if program.objective is not None:
        value = sum(Fraction(c) * x for c, x in zip(program.objective, point))
    return Solution(OPTIMAL, point, value)


def feasible_point(program: LinearProgram) -> Optional[List[Fraction]]:
    """Return a feasible point of the program, or None when infeasible."""
    solution = solve(
        LinearProgram(
            variables=program.variables,
            equalities=program.equalities,
            inequalities=program.inequalities,
        )
    )
    return solution.point if solution.feasible else None
