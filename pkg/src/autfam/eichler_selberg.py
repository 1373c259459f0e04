"""Traces of Hecke operators on S_k(Gamma_0(N)) with trivial character.

The trace is the Eichler-Selberg closed form,

    Tr T_n = A1 + A2 + A3 + A4,

with the identity term A1, the elliptic terms A2 (Hurwitz class numbers
weighted by local solution counts), the hyperbolic terms A3 over d | n, and
the weight-two correction A4.  New-subspace traces are obtained by Moebius
style inversion over the divisors of the level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import arith


class UnsupportedQuery(ValueError):
    """Raised for gcd(n, N) > 1; Hecke operators are only used away from N."""


@dataclass(frozen=True)
class TraceQuery:
    k: int
    N: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.k % 2:
            raise ValueError(f"weight must be even and >= 2, got {self.k}")
        if self.N < 1 or self.n < 1:
            raise ValueError("level and Hecke index must be positive")
        if math.gcd(self.n, self.N) != 1:
            raise UnsupportedQuery(f"gcd(n={self.n}, N={self.N}) > 1")


@dataclass(frozen=True)
class TraceResult:
    value: Fraction
    query: TraceQuery
    side: str  # "full" or "new"

    def __int__(self):
        if self.value.denominator != 1:
            raise ValueError(f"trace {self.value} is not an integer")
        return self.value.numerator


def gegenbauer_weight(k: int, t: int, n: int) -> int:
    """(rho^(k-1) - rhobar^(k-1)) / (rho - rhobar) for rho + rhobar = t, rho rhobar = n."""
    prev, cur = 0, 1
    for _ in range(k - 2):
        prev, cur = cur, t * cur - n * prev
    return cur


def _root_count(t: int, n: int, N: int, modulus: int) -> int:
    # x runs mod N; the congruence mod N*N_f is well defined because N_f | 2x - t
    return sum(1 for x in range(N) if (x * x - t * x + n) % modulus == 0)


@lru_cache(maxsize=None)
def _elliptic_weights(N: int, n: int) -> tuple[tuple[int, Fraction], ...]:
    """Pairs (t, sum_f h_w((t^2-4n)/f^2) mu(t, f, n)) for t >= 0, t^2 < 4n."""
    out = []
    psi_N = arith.psi(N)
    t = 0
    while t * t < 4 * n:
        disc = 4 * n - t * t
        acc = Fraction(0)
        for f in arith.square_divisors(disc):
            m = disc // (f * f)
            if m % 4 not in (0, 3):
                continue
            Nf = math.gcd(N, f)
            mu = Fraction(psi_N, arith.psi(N // Nf)) * _root_count(t, n, N, N * Nf)
            if mu:
                acc += arith.primitive_class_number(m) * mu
        out.append((t, acc))
        t += 1
    return tuple(out)


def _hyperbolic_weight(N: int, n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for d in arith.divisors(n):
        gap = n // d - d
        inner = 0
        for tau in arith.divisors(N):
            g = math.gcd(tau, N // tau)
            if gap % g == 0:
                inner += arith.euler_phi(g)
        out.append((min(d, n // d), inner))
    return tuple(out)


@lru_cache(maxsize=None)
def _trace_full(k: int, N: int, n: int) -> Fraction:
    a1 = Fraction(0)
    if arith.is_square(n):
        a1 = Fraction((k - 1) * arith.psi(N), 12) * math.isqrt(n) ** (k - 2)

    a2 = Fraction(0)
    for t, weight in _elliptic_weights(N, n):
        if weight:
            mult = 1 if t == 0 else 2  # t and -t contribute equally
            a2 += mult * gegenbauer_weight(k, t, n) * weight
    a2 = -a2 / 2

    a3 = Fraction(-sum(m ** (k - 1) * inner for m, inner in _hyperbolic_weight(N, n)), 2)

    a4 = 0
    if k == 2:
        a4 = sum(t for t in arith.divisors(n) if math.gcd(N, n // t) == 1)

    return a1 + a2 + a3 + a4


def trace_hecke(q: TraceQuery) -> TraceResult:
    """Trace of T_n on the full cusp space S_k(Gamma_0(N))."""
    return TraceResult(_trace_full(q.k, q.N, q.n), q, "full")


def beta(m: int) -> int:
    """Dirichlet inverse of sigma_0: beta(p) = -2, beta(p^2) = 1, beta(p^e) = 0 for e > 2."""
    out = 1
    for _, e in arith.factorize(m):
        if e == 1:
            out *= -2
        elif e > 2:
            return 0
    return out


def trace_new(q: TraceQuery) -> TraceResult:
    """Trace of T_n on the new subspace S_k^new(Gamma_0(N))."""
    total = Fraction(0)
    for M in arith.divisors(q.N):
        b = beta(q.N // M)
        if b:
            total += b * _trace_full(q.k, M, q.n)
    return TraceResult(total, q, "new")


def dim_cusp(k: int, N: int) -> int:
    return int(trace_hecke(TraceQuery(k, N, 1)))


def dim_new(k: int, N: int) -> int:
    return int(trace_new(TraceQuery(k, N, 1)))
