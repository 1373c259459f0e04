"""Family counts for PGL(2)/Q and the Sato-Tate residual harness.

Two kinds of families are handled.  Vertical families are the newforms of
level q^3 (simple supercuspidal at q), horizontal families the newforms of
squarefree level q_S (Steinberg or its unramified twist at every prime of S).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from . import arith
from .eichler_selberg import TraceQuery, dim_new, trace_new

DIGITS = 50


class UnsupportedPrime(ValueError):
    pass


def _check_sc(k: int, q: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"weight must be even and >= 2, got {k}")
    if not arith.is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q < 5:
        raise UnsupportedPrime("supercuspidal family counts need q >= 5")


@dataclass(frozen=True)
class FamilySpec:
    k: int
    kind: str  # "supercuspidal" or "steinberg"
    primes: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "supercuspidal":
            if len(self.primes) != 1:
                raise ValueError("a supercuspidal family is ramified at exactly one prime")
            _check_sc(self.k, self.primes[0])
        elif self.kind == "steinberg":
            if not self.primes:
                raise ValueError("a Steinberg family needs a nonempty set S")
            if len(set(self.primes)) != len(self.primes) or not all(map(arith.is_prime, self.primes)):
                raise ValueError(f"S must be a set of distinct primes, got {self.primes}")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def level(self) -> int:
        if self.kind == "supercuspidal":
            return self.primes[0] ** 3
        return math.prod(self.primes)

    def size(self) -> int:
        return dim_new(self.k, self.level)


def count_sc_pair(k: int, q: int) -> Fraction:
    """m(D_k, sigma) + m(D_k, sigma') for a pair of simple supercuspidals at q."""
    _check_sc(k, q)
    return Fraction((k - 1) * (q * q - 1), 12)


def count_sc_aggregate(k: int, q: int) -> int:
    """Total count over all 2(q-1) simple supercuspidals; both routes must agree."""
    _check_sc(k, q)
    via_trace = dim_new(k, q**3)
    via_pairs = (q - 1) * count_sc_pair(k, q)
    if via_trace != via_pairs:
        raise AssertionError(f"dim_new({k}, {q}^3) = {via_trace} but pair formula gives {via_pairs}")
    return via_trace


def _as_prime_set(S) -> tuple[int, ...]:
    if isinstance(S, int):
        S = (S,)
    S = tuple(sorted(S))
    if len(set(S)) != len(S) or not all(map(arith.is_prime, S)):
        raise ValueError(f"S must be a squarefree set of primes, got {S}")
    return S


def count_st_main(k: int, S) -> Fraction:
    """Main term (k-1) phi(q_S) / (12 * 2^|S|) for one sign choice at each prime of S."""
    S = _as_prime_set(S)
    qS = math.prod(S)
    return Fraction((k - 1) * arith.euler_phi(qS), 12 * 2 ** len(S))


def count_st_actual(k: int, S) -> int:
    """Combined count over {St, St'} at every prime of S, i.e. dim of new forms of level q_S."""
    S = _as_prime_set(S)
    return dim_new(k, math.prod(S))


def steinberg_defect(k: int, S) -> Fraction:
    """actual - 2^|S| * main; bounded independently of k and S."""
    S = _as_prime_set(S)
    return count_st_actual(k, S) - 2 ** len(S) * count_st_main(k, S)


def tau_prime_pgl2(S) -> Fraction:
    """zeta(-1) * prod_{q in S} (1 - q) / 2 over Q."""
    S = _as_prime_set(S) if S else ()
    out = Fraction(-1, 12)
    for q in S:
        out *= Fraction(1 - q, 2)
    return out


@dataclass
class EquidistRow:
    n: int
    S: Fraction
    residual: Fraction
    is_square: bool


@dataclass
class EquidistReport:
    k: int
    N: int
    m: int
    rows: list[EquidistRow] = field(default_factory=list)

    @property
    def C0(self) -> Fraction:
        return max((abs(r.residual) / r.n for r in self.rows), default=Fraction(0))

    def nonsquare_mean(self) -> Fraction:
        vals = [r.S for r in self.rows if not r.is_square]
        return sum(vals, Fraction(0)) / len(vals) if vals else Fraction(0)


def normalized_trace_sum(k: int, N: int, n: int) -> Fraction:
    """S(n) = sqrt(n) * sum_f lambda_f(n) over the new forms of level N.

    With lambda_f(n) = a_n(f) / n^((k-1)/2) this equals Tr(T_n | new) / n^(k/2-1),
    an exact rational whose main term is m * [n is a square].
    """
    tr = trace_new(TraceQuery(k, N, n)).value
    return tr / n ** (k // 2 - 1)


def equidist_report(k: int, N: int, n_max: int) -> EquidistReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    m = dim_new(k, N)
    report = EquidistReport(k, N, m)
    for n in range(1, n_max + 1):
        if math.gcd(n, N) != 1:
            continue
        S = normalized_trace_sum(k, N, n)
        sq = arith.is_square(n)
        report.rows.append(EquidistRow(n, S, S - (m if sq else 0), sq))
    return report


def to_decimal(x: Fraction, digits: int = DIGITS) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)
