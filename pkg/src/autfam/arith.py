"""Exact integer and rational substrate.

Valuations, Kronecker symbols, Hurwitz class numbers (with an optional
persistent cache) and a few multiplicative functions.  Everything returns
``int`` or ``fractions.Fraction``; nothing here touches floating point.
"""

from __future__ import annotations

import math
import os
import threading
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import sympy
from sympy.functions.combinatorial.numbers import kronecker_symbol

INF = math.inf

CACHE_ENV = "AUTFAM_CACHE"


def _require_prime(p: int) -> None:
    if not (isinstance(p, int) and sympy.isprime(p)):
        raise ValueError(f"expected a prime, got {p!r}")


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as sorted ``((p, e), ...)``."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    return tuple(sorted(sympy.factorint(n).items()))


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def square_divisors(n: int) -> list[int]:
    """All f >= 1 with f^2 | n."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e // 2 + 1)]
    return sorted(out)


def padic_valuation(x, p: int) -> float | int:
    """Normalized p-adic valuation of a rational; ``math.inf`` for zero.

    >>> padic_valuation(Fraction(3, 25), 5)
    -2
    """
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INF
    return _vint(x.numerator, p) - _vint(x.denominator, p)


def _vint(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vint(n: int, p: int) -> float | int:
    """Valuation of an integer without the primality check (hot loops)."""
    if n == 0:
        return INF
    return _vint(n, p)


def kronecker(a: int, m: int) -> int:
    """Kronecker symbol (a/m)."""
    if m == 0:
        raise ValueError("kronecker symbol undefined for m = 0")
    return int(kronecker_symbol(a, m))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def sigma0(n: int) -> int:
    if n < 1:
        raise ValueError("sigma0 expects n >= 1")
    return math.prod(e + 1 for _, e in factorize(n))


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def psi(n: int) -> int:
    """Dedekind psi, the index of Gamma_0(n) in SL_2(Z)."""
    out = n
    for p, _ in factorize(n):
        out = out // p * (p + 1)
    return out


def _reduced_form_count(n: int) -> Fraction:
    # reduced forms: |b| <= a <= c, with b >= 0 whenever |b| == a or a == c
    total = Fraction(0)
    a = 1
    while 3 * a * a <= n:
        for b in range(-a + 1, a + 1):
            if (b * b + n) % (4 * a):
                continue
            c = (b * b + n) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if a == b == c:
                total += Fraction(1, 3)
            elif b == 0 and a == c:
                total += Fraction(1, 2)
            else:
                total += 1
        a += 1
    return total


class ClassNumberCache:
    """Hurwitz class numbers keyed by discriminant, shared across threads.

    When a path is configured the cache is a flat text file with one
    ``D,num,den`` line per discriminant ``D = -n``.  It is read lazily on
    first use and appended to as new values are computed.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self._lock = threading.Lock()
        self._values: dict[int, Fraction] = {}
        self._path = Path(path) if path else None
        self._loaded = False

    @property
    def path(self) -> Path | None:
        return self._path

    def _load(self) -> None:
        if self._loaded:
            return
        if self._path is not None and self._path.exists():
            with self._path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    d, num, den = line.split(",")
                    self._values[-int(d)] = Fraction(int(num), int(den))
        self._loaded = True

    def get(self, n: int) -> Fraction | None:
        # dict reads are atomic; only the first load needs the lock
        if not self._loaded:
            with self._lock:
                self._load()
        return self._values.get(n)

    def put(self, n: int, value: Fraction) -> None:
        with self._lock:
            self._load()
            if n in self._values:
                return
            self._values[n] = value
            if self._path is not None:
                self._path.parent.mkdir(parents=True, exist_ok=True)
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(f"{-n},{value.numerator},{value.denominator}\n")

    def __len__(self) -> int:
        self.get(0)
        return len(self._values)


_cache = ClassNumberCache(os.environ.get(CACHE_ENV) or None)


def set_cache_path(path: str | os.PathLike | None) -> ClassNumberCache:
    """Point the class-number cache at ``path`` (``None`` keeps it in memory)."""
    global _cache
    _cache = ClassNumberCache(path)
    return _cache


def class_number_cache() -> ClassNumberCache:
    return _cache


def hurwitz_class_number(n: int) -> Fraction:
    """Hurwitz class number H(n).

    H(0) = -1/12, H(n) = 0 for n = 1, 2 mod 4, and otherwise the number of
    reduced positive definite forms of discriminant -n, where forms
    equivalent to a(x^2 + y^2) count 1/2 and a(x^2 + xy + y^2) count 1/3.
    """
    if n < 0:
        raise ValueError("hurwitz_class_number expects n >= 0")
    if n == 0:
        return Fraction(-1, 12)
    if n % 4 in (1, 2):
        return Fraction(0)
    hit = _cache.get(n)
    if hit is not None:
        return hit
    value = _reduced_form_count(n)
    _cache.put(n, value)
    return value


def moebius(n: int) -> int:
    out = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        out = -out
    return out


@lru_cache(maxsize=None)
def primitive_class_number(m: int) -> Fraction:
    """Weighted class number of primitive forms of discriminant -m (h(-3) = 1/3, h(-4) = 1/2)."""
    total = Fraction(0)
    for f in square_divisors(m):
        mu = moebius(f)
        if mu:
            total += mu * hurwitz_class_number(m // (f * f))
    return total
