"""Exact-rational linear programming.

A dense two-phase tableau simplex over `fractions.Fraction` with Bland's
anti-cycling rule.  Instances here are tiny (tens of rows/columns), so the
priorities are exactness and termination, not speed: every answer is a
certificate-grade rational, never a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import LPError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[list[Fraction]]
    value: Optional[Fraction]

    def __bool__(self) -> bool:
        return self.status == OPTIMAL


class LinearProgram:
    """Builder for small exact LPs over free or nonnegative variables.

    Variables are free by default; pass ``nonneg=True`` (or a per-variable
    sequence) to constrain signs.  Free variables are split internally.
    """

    def __init__(self, num_vars: int, nonneg=False):
        if num_vars < 0:
            raise LPError("negative variable count")
        self.n = num_vars
        if isinstance(nonneg, bool):
            self.nonneg = [nonneg] * num_vars
        else:
            self.nonneg = list(nonneg)
            if len(self.nonneg) != num_vars:
                raise LPError("nonneg flags do not match variable count")
        self._rows: list[tuple[list[Fraction], Fraction, str]] = []
        self._c: Optional[list[Fraction]] = None
        self._sense = 1  # +1 minimize, -1 maximize

    # -- construction ---------------------------------------------------

    def _coeffs(self, coeffs: Sequence) -> list[Fraction]:
        if len(coeffs) != self.n:
            raise LPError("coefficient length mismatch")
        return [Fraction(c) for c in coeffs]

    def add_le(self, coeffs: Sequence, rhs) -> None:
        self._rows.append((self._coeffs(coeffs), Fraction(rhs), "le"))

    def add_ge(self, coeffs: Sequence, rhs) -> None:
        self._rows.append(([-c for c in self._coeffs(coeffs)], -Fraction(rhs), "le"))

    def add_eq(self, coeffs: Sequence, rhs) -> None:
        self._rows.append((self._coeffs(coeffs), Fraction(rhs), "eq"))

    def set_minimize(self, coeffs: Sequence) -> None:
        self._c = self._coeffs(coeffs)
        self._sense = 1

    def set_maximize(self, coeffs: Sequence) -> None:
        self._c = self._coeffs(coeffs)
        self._sense = -1

    # -- solution -------------------------------------------------------

    def solve(self) -> LPResult:
        c_user = self._c if self._c is not None else [Fraction(0)] * self.n

        # column layout: each free var -> (u, v) pair, nonneg var -> one col
        col_of: list[tuple[int, Optional[int]]] = []
        ncols = 0
        for flag in self.nonneg:
            if flag:
                col_of.append((ncols, None))
                ncols += 1
            else:
                col_of.append((ncols, ncols + 1))
                ncols += 2

        nslack = sum(1 for _, _, kind in self._rows if kind == "le")
        total = ncols + nslack

        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        slack_col = ncols
        slack_of_row: list[Optional[int]] = []
        for coeffs, b, kind in self._rows:
            # scale the row to integers: same feasible set, smaller pivots
            scale = lcm(b.denominator, *(c.denominator for c in coeffs))
            if scale != 1:
                coeffs = [c * scale for c in coeffs]
                b = b * scale
            row = [Fraction(0)] * total
            for i, c in enumerate(coeffs):
                pos, neg = col_of[i]
                row[pos] += c
                if neg is not None:
                    row[neg] -= c
            if kind == "le":
                row[slack_col] = Fraction(1)
                slack_of_row.append(slack_col)
                slack_col += 1
            else:
                slack_of_row.append(None)
            rows.append(row)
            rhs.append(b)

        # make rhs nonnegative
        for i in range(len(rows)):
            if rhs[i] < 0:
                rows[i] = [-v for v in rows[i]]
                rhs[i] = -rhs[i]
                if slack_of_row[i] is not None:
                    slack_of_row[i] = None  # slack coefficient now -1, unusable as basis

        # initial basis: slacks where possible, artificials elsewhere
        basis: list[int] = []
        art_cols: list[int] = []
        for i, row in enumerate(rows):
            sc = slack_of_row[i]
            if sc is not None and row[sc] == 1:
                basis.append(sc)
            else:
                art = total + len(art_cols)
                art_cols.append(art)
                basis.append(art)
        full = total + len(art_cols)
        for i, row in enumerate(rows):
            row.extend([Fraction(0)] * len(art_cols))
            if basis[i] >= total:
                row[basis[i]] = Fraction(1)

        tableau = [row + [rhs[i]] for i, row in enumerate(rows)]
        m = len(tableau)

        if art_cols:
            # phase 1: minimize the sum of artificials
            z = [Fraction(0)] * (full + 1)
            for j in art_cols:
                z[j] = Fraction(1)
            for i in range(m):
                if basis[i] >= total:
                    z = [zj - tj for zj, tj in zip(z, tableau[i])]
            self._iterate(tableau, basis, z, full)
            phase1 = -z[-1]
            if phase1 != 0:
                return LPResult(INFEASIBLE, None, None)
            self._drive_out_artificials(tableau, basis, total)
            # drop artificial columns
            keep = list(range(total)) + [full]
            tableau[:] = [[row[j] for j in keep] for row in tableau]
            m = len(tableau)
            full = total

        # phase 2
        c_std = [Fraction(0)] * total
        for i, c in enumerate(c_user):
            pos, neg = col_of[i]
            c_std[pos] += self._sense * c
            if neg is not None:
                c_std[neg] -= self._sense * c
        z = list(c_std) + [Fraction(0)]
        for i in range(m):
            if z[basis[i]] != 0:
                coeff = z[basis[i]]
                z = [zj - coeff * tj for zj, tj in zip(z, tableau[i])]
        status = self._iterate(tableau, basis, z, full)
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED, None, None)

        values = [Fraction(0)] * total
        for i in range(m):
            if basis[i] < total:
                values[basis[i]] = tableau[i][-1]
        x = []
        for pos, neg in col_of:
            v = values[pos]
            if neg is not None:
                v -= values[neg]
            x.append(v)
        objective = sum(c * v for c, v in zip(c_user, x))
        return LPResult(OPTIMAL, x, objective)

    @staticmethod
    def _iterate(tableau, basis, z, ncols) -> str:
        """Run simplex pivots (Bland's rule) until optimal or unbounded."""
        m = len(tableau)
        while True:
            enter = next((j for j in range(ncols) if z[j] < 0), None)
            if enter is None:
                return OPTIMAL
            leave, best = None, None
            for i in range(m):
                a = tableau[i][enter]
                if a > 0:
                    ratio = tableau[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            LinearProgram._pivot(tableau, basis, z, leave, enter)

    @staticmethod
    def _pivot(tableau, basis, z, r, c) -> None:
        piv = tableau[r][c]
        tableau[r] = [v / piv if v else v for v in tableau[r]]
        row_r = tableau[r]
        for i in range(len(tableau)):
            if i != r and tableau[i][c] != 0:
                f = tableau[i][c]
                tableau[i] = [v - f * w if w else v for v, w in zip(tableau[i], row_r)]
        if z[c] != 0:
            f = z[c]
            z[:] = [v - f * w if w else v for v, w in zip(z, row_r)]
        basis[r] = c

    @staticmethod
    def _drive_out_artificials(tableau, basis, total) -> None:
        """Pivot zero-valued artificial basics onto real columns; drop dead rows."""
        i = 0
        while i < len(tableau):
            if basis[i] >= total:
                col = next((j for j in range(total) if tableau[i][j] != 0), None)
                if col is None:
                    del tableau[i]
                    del basis[i]
                    continue
                dummy = [Fraction(0)] * len(tableau[i])
                LinearProgram._pivot(tableau, basis, dummy, i, col)
            i += 1
