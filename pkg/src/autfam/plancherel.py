"""Unramified Plancherel measure of PGL(2, Q_p) on the Satake interval [-2, 2].

The tempered unramified dual is parametrized by x = alpha + 1/alpha with
|alpha| = 1.  On it the measure has density

    (p+1)/pi * sqrt(1 - x^2/4) / ((p^{1/2} + p^{-1/2})^2 - x^2),

which tends to the semicircle as p grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath

from .eichler_selberg import TraceQuery, dim_new, trace_new

TOL = 1e-12
WORK_DPS = 30


def density(p: float, x: float) -> float:
    if abs(x) > 2:
        raise ValueError(f"x = {x} outside the Satake interval [-2, 2]")
    if p < 2:
        raise ValueError("p must be >= 2")
    c = math.sqrt(p) + 1 / math.sqrt(p)
    return (p + 1) / math.pi * math.sqrt(max(0.0, 1 - x * x / 4)) / (c * c - x * x)


def semicircle(x: float) -> float:
    return math.sqrt(max(0.0, 4 - x * x)) / (2 * math.pi)


def chebyshev_u(m: int, x):
    """X_m(x) with X_m(2 cos t) = sin((m+1)t)/sin t; X_{-1} = 0."""
    if m < 0:
        return x * 0
    prev, cur = x * 0, x * 0 + 1
    for _ in range(m):
        prev, cur = cur, x * cur - prev
    return cur


def satake_trace(m: int, p: float, x):
    """tr of 1_{K diag(p^m, 1) K} on the unramified representation with parameter x."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return x * 0 + 1
    return mpmath.sqrt(p) ** m * (chebyshev_u(m, x) - chebyshev_u(m - 2, x) / p)


def _density_theta(p):
    """density(2 cos th) * |dx/dth| as a function of th in [0, pi]."""
    p = mpmath.mpf(p)
    c2 = (mpmath.sqrt(p) + 1 / mpmath.sqrt(p)) ** 2

    def w(th):
        s = mpmath.sin(th)
        return (p + 1) / mpmath.pi * 2 * s * s / (c2 - 4 * mpmath.cos(th) ** 2)

    return w


def integrate(f, tol: float = TOL) -> float:
    """Integral of f over th in [0, pi] by adaptive Gauss-Legendre.

    Integrands are written in the angle th with x = 2 cos th, which absorbs
    the square-root endpoint behaviour of the density; they are then smooth.
    Working precision is 30 digits so that integrands of size p^{m/2} still
    resolve cancellations far below ``tol``.
    """
    with mpmath.workdps(WORK_DPS):
        val, err = mpmath.quad(f, [0, mpmath.pi], method="gauss-legendre", error=True)
        if err > tol:
            raise ArithmeticError(f"quadrature error estimate {err} exceeds {tol}")
        return float(val)


@dataclass(frozen=True)
class PlancherelSpec:
    p: float
    tol: float = TOL

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if not 0 < self.tol <= 1e-8:
            raise ValueError("quadrature tolerance must lie in (0, 1e-8]")


def integrate_against(spec: PlancherelSpec, g) -> float:
    """Integral of g(x) d mu_p(x); g is evaluated on mpmath numbers."""
    with mpmath.workdps(WORK_DPS):
        w = _density_theta(spec.p)
        return integrate(lambda th: g(2 * mpmath.cos(th)) * w(th), spec.tol)


def total_mass(p: float, tol: float = TOL) -> float:
    return integrate_against(PlancherelSpec(p, tol), lambda x: x * 0 + 1)


def moment(p: float, j: int, tol: float = TOL) -> float:
    if j < 0:
        raise ValueError("j must be >= 0")
    return integrate_against(PlancherelSpec(p, tol), lambda x: x**j)


def inversion_defect(m: int, p: float, tol: float = TOL) -> float:
    """|int satake_trace(m, p, x) d mu_p - delta_{m,0}|."""
    val = integrate_against(PlancherelSpec(p, tol), lambda x: satake_trace(m, p, x))
    return abs(val - (1.0 if m == 0 else 0.0))


def semicircle_moment(j: int) -> int:
    if j % 2:
        return 0
    i = j // 2
    return math.comb(2 * i, i) // (i + 1)


def power_in_u_basis(j: int) -> dict[int, int]:
    """x^j = sum_i c_i X_i(x) (ballot numbers)."""
    out = {}
    for i in range(j % 2, j + 1, 2):
        r = (j - i) // 2
        out[i] = math.comb(j, r) - (math.comb(j, r - 1) if r else 0)
    return out


def exact_moment(p: int, j: int):
    """Closed form sum_i c_{j,i} p^{-i/2} over even i, from int X_{2l} d mu_p = p^{-l}."""
    return sum((Fraction(c, p ** (i // 2)) for i, c in power_in_u_basis(j).items() if i % 2 == 0), Fraction(0))


@dataclass
class CompareRow:
    j: int
    empirical: Decimal
    plancherel: float
    discrepancy: float


@dataclass
class CompareReport:
    k: int
    N: int
    p: int
    m: int
    rows: list[CompareRow] = field(default_factory=list)

    @property
    def max_discrepancy(self) -> float:
        return max((r.discrepancy for r in self.rows), default=0.0)


def empirical_compare(k: int, N: int, p: int, J: int, digits: int = 50) -> CompareReport:
    """Average over new forms f of level N of x_f^j, x_f = a_p(f)/p^{(k-1)/2}, against mu_p.

    sum_f X_i(x_f) = Tr(T_{p^i} | new) / p^{i(k-1)/2}, so the family moment is
    (1/m) * sum_i c_{j,i} * Tr(T_{p^i}) / p^{i(k-1)/2}.
    """
    if N % p == 0:
        raise ValueError(f"p = {p} divides the level {N}")
    if not 0 <= J <= 8:
        raise ValueError("J must lie in [0, 8]")
    m = dim_new(k, N)
    report = CompareReport(k, N, p, m)
    with localcontext() as ctx:
        ctx.prec = digits
        sqrt_p = Decimal(p).sqrt()
        sums = []
        for i in range(J + 1):
            tr = trace_new(TraceQuery(k, N, p**i)).value
            scale = sqrt_p ** (i * (k - 1))
            sums.append(Decimal(tr.numerator) / Decimal(tr.denominator) / scale)
        for j in range(J + 1):
            emp = sum((c * sums[i] for i, c in power_in_u_basis(j).items()), Decimal(0)) / m
            pl = moment(p, j)
            report.rows.append(CompareRow(j, emp, pl, abs(float(emp) - pl)))
    return report
