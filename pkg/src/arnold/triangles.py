"""Boustrophedon triangles: Entringer numbers, the signed Arnold double
triangle, its polynomial refinement, and the tangent/secant derivative
polynomials tied to it.

All arithmetic is exact and 64-bit checked; asking for a row beyond the
first overflow raises OverflowError rather than wrapping.

The derivative polynomials P_n, Q_n are defined by
    d^n/dx^n tan(x) = P_n(tan x)      and      d^n/dx^n sec(x) = Q_n(tan x) sec(x).
Differentiating once more and substituting t = tan(x) (so dt/dx = 1 + t^2)
gives the recurrences implemented here:
    P_{n+1}(t) = (1 + t^2) P_n'(t)
    Q_{n+1}(t) = (1 + t^2) Q_n'(t) + t Q_n(t)
seeded by P_1 = 1 + t^2 and Q_1 = t.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from .laurent import INT64_MAX, INT64_MIN, LaurentPoly

V = TypeVar("V", int, LaurentPoly)


def _checked_add(a: int, b: int) -> int:
    s = a + b
    if s < INT64_MIN or s > INT64_MAX:
        raise OverflowError(f"triangle entry {s} exceeds 64-bit range")
    return s


@dataclass(frozen=True)
class ArnoldRow(Generic[V]):
    """One row of the double triangle.

    neg holds v_{n,-n}..v_{n,-1} (that order), pos holds v_{n,1}..v_{n,n}.
    """

    n: int
    neg: tuple[V, ...]
    pos: tuple[V, ...]

    def value(self, k: int) -> V:
        if k == 0 or abs(k) > self.n:
            raise IndexError(f"k={k} out of range for row {self.n}")
        if k > 0:
            return self.pos[k - 1]
        return self.neg[self.n + k]

    def entries(self):
        for k in range(-self.n, 0):
            yield k, self.value(k)
        for k in range(1, self.n + 1):
            yield k, self.value(k)


def entringer(n_max: int) -> list[tuple[int, ...]]:
    """Rows (E_{n,1},...,E_{n,n}) for n = 1..n_max.

    E_{1,1} = 1, E_{n,1} = 0 for n >= 2, and
    E_{n,k} = E_{n,k-1} + E_{n-1,n-k+1}.  Row sums are the Euler numbers.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = [0]
        for k in range(2, n + 1):
            row.append(_checked_add(row[-1], prev[n - k]))
        rows.append(tuple(row))
    return rows


def euler_numbers(n_max: int) -> list[int]:
    """E_n = row sums of the Entringer triangle: 1, 1, 2, 5, 16, 61, ..."""
    totals = []
    for row in entringer(n_max):
        s = 0
        for v in row:
            s = _checked_add(s, v)
        totals.append(s)
    return totals


def arnold_numbers(n_max: int) -> list[ArnoldRow[int]]:
    """The signed double triangle, computed boustrophedon-style.

    Row order is fixed: v_{n,-n} = 0, then the negative side right-to-left
    via v_{n,-k} = v_{n,-k-1} + v_{n-1,k}, the bridge v_{n,1} = v_{n,-1},
    then the positive side via v_{n,k} = v_{n,k-1} + v_{n-1,-k+1}.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows: list[ArnoldRow[int]] = [ArnoldRow(1, (1,), (1,))]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        neg_rev = [0]  # v_{n,-n}, v_{n,-n+1}, ...
        for k in range(n - 1, 0, -1):
            neg_rev.append(_checked_add(neg_rev[-1], prev.value(k)))
        pos = [neg_rev[-1]]  # v_{n,1} = v_{n,-1}
        for k in range(2, n + 1):
            pos.append(_checked_add(pos[-1], prev.value(-k + 1)))
        rows.append(ArnoldRow(n, tuple(neg_rev), tuple(pos)))
    return rows


def arnold_hoffman(n_max: int) -> list[ArnoldRow[LaurentPoly]]:
    """Polynomial refinement of the double triangle.

    V_{1,1} = t^2, V_{1,-1} = 1, V_{n,-n} = 0, and
        V_{n,-k} = V_{n,-k-1} + t^-1 V_{n-1,k}
        V_{n,1}  = t^2 V_{n,-1}
        V_{n,k}  = V_{n,k-1} + t V_{n-1,-k+1}.
    Every finished entry has nonnegative exponents of parity n+1.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    t2 = LaurentPoly.t_power(2)
    rows: list[ArnoldRow[LaurentPoly]] = [ArnoldRow(1, (LaurentPoly.one(),), (t2,))]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        neg_rev = [LaurentPoly.zero()]
        for k in range(n - 1, 0, -1):
            neg_rev.append(neg_rev[-1] + prev.value(k).shifted(-1))
        pos = [neg_rev[-1].shifted(2)]
        for k in range(2, n + 1):
            pos.append(pos[-1] + prev.value(-k + 1).shifted(1))
        rows.append(ArnoldRow(n, tuple(neg_rev), tuple(pos)))
    return rows


def hoffman_pq(n_max: int) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """Pairs (P_n, Q_n) for n = 1..n_max (see module docstring)."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    sec2 = LaurentPoly({0: 1, 2: 1})
    p = sec2
    q = LaurentPoly.t_power(1)
    out = [(p, q)]
    for _ in range(n_max - 1):
        p = sec2 * p.derivative()
        q = sec2 * q.derivative() + q.shifted(1)
        out.append((p, q))
    return out


@dataclass(frozen=True)
class IdentityReport:
    n: int
    q_side_ok: bool  # t*Q_n == sum of positive-side polynomials
    p_side_ok: bool  # P_n - t*Q_n == sum of negative-side polynomials

    @property
    def ok(self) -> bool:
        return self.q_side_ok and self.p_side_ok


def check_hoffman_identities(n_max: int) -> list[IdentityReport]:
    """Check t*Q_n = sum_{k>0} V_{n,k} and P_n - t*Q_n = sum_{k>0} V_{n,-k}."""
    polys = arnold_hoffman(n_max)
    pq = hoffman_pq(n_max)
    reports = []
    for row, (p, q) in zip(polys, pq):
        pos_sum = LaurentPoly.zero()
        for v in row.pos:
            pos_sum = pos_sum + v
        neg_sum = LaurentPoly.zero()
        for v in row.neg:
            neg_sum = neg_sum + v
        tq = q.shifted(1)
        reports.append(IdentityReport(row.n, tq == pos_sum, p - tq == neg_sum))
    return reports
