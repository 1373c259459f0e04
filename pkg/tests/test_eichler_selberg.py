"""Trace formula against q-expansions of eta products spanning one-dimensional spaces."""

import math
from fractions import Fraction

import pytest

from autfam import arith
from autfam.eichler_selberg import (
    TraceQuery,
    UnsupportedQuery,
    beta,
    dim_cusp,
    dim_new,
    gegenbauer_weight,
    trace_hecke,
    trace_new,
)

PREC = 60


def eta_product(factors: dict[int, int], prec: int = PREC) -> list[int]:
    """Coefficients c_1..c_prec of prod_a eta(a z)^{b_a}, which must start at q^1."""
    shift = sum(a * b for a, b in factors.items())
    assert shift == 24, "only weight-k forms with leading q^1 are used here"
    series = [0] * (prec + 1)
    series[0] = 1
    for a, b in factors.items():
        for n in range(1, prec // a + 1):
            # multiply by (1 - q^{a n})^b
            for _ in range(abs(b)):
                if b > 0:
                    for i in range(prec, a * n - 1, -1):
                        series[i] -= series[i - a * n]
                else:
                    for i in range(a * n, prec + 1):
                        series[i] += series[i - a * n]
    return [0] + series[: prec]  # index i -> coefficient of q^i


ETA_FORMS = [
    # (k, N, eta exponents)
    (2, 11, {1: 2, 11: 2}),
    (4, 5, {1: 4, 5: 4}),
    (6, 3, {1: 6, 3: 6}),
    (8, 2, {1: 8, 2: 8}),
    (6, 4, {2: 12}),
    (4, 9, {3: 8}),
    (4, 8, {2: 4, 4: 4}),
    (2, 32, {4: 2, 8: 2}),
    (2, 36, {6: 4}),
    (12, 1, {1: 24}),
]


@pytest.mark.parametrize("k,N,eta", ETA_FORMS)
def test_one_dimensional_spaces(k, N, eta):
    assert dim_new(k, N) == 1
    coeffs = eta_product(eta)
    assert coeffs[1] == 1
    for n in range(1, PREC + 1):
        if math.gcd(n, N) == 1:
            assert trace_new(TraceQuery(k, N, n)).value == coeffs[n], (k, N, n)


def test_ramanujan_tau():
    tau = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744, 11: 534612, 13: -577738}
    for n, t in tau.items():
        assert trace_hecke(TraceQuery(12, 1, n)).value == t


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_hecke_recursion_delta(p):
    tp = trace_hecke(TraceQuery(12, 1, p)).value
    tp2 = trace_hecke(TraceQuery(12, 1, p * p)).value
    tp3 = trace_hecke(TraceQuery(12, 1, p**3)).value
    assert tp2 == tp * tp - p**11
    assert tp3 == tp * tp2 - p**11 * tp


def test_multiplicativity_level_11():
    ap = {n: trace_new(TraceQuery(2, 11, n)).value for n in range(1, 80) if n % 11}
    for m in range(1, 80):
        for n in range(1, 80 // m + 1):
            if m * n < 80 and math.gcd(m, n) == 1 and (m * n) % 11:
                assert ap[m * n] == ap[m] * ap[n]


def cohen_oesterle_dim(k: int, N: int) -> int:
    """dim S_k(Gamma_0(N)) from the classical index/elliptic point/cusp formula."""
    fac = arith.factorize(N)
    mu = N
    for p, _ in fac:
        mu = mu // p * (p + 1)
    if N % 4 == 0:
        nu2 = 0
    else:
        nu2 = math.prod(1 + arith.kronecker(-4, p) if p != 2 else 1 for p, _ in fac)
    if N % 9 == 0:
        nu3 = 0
    else:
        nu3 = math.prod(1 + arith.kronecker(-3, p) if p != 3 else 1 for p, _ in fac)
    cusps = sum(arith.euler_phi(math.gcd(d, N // d)) for d in arith.divisors(N))
    val = Fraction((k - 1) * mu, 12) + (Fraction(k // 4) - Fraction(k - 1, 4)) * nu2 + (Fraction(k // 3) - Fraction(k - 1, 3)) * nu3 - Fraction(cusps, 2)
    if k == 2:
        val += 1
    assert val.denominator == 1
    return int(val)


@pytest.mark.parametrize("N", range(1, 61))
def test_dim_cusp_against_genus_formula(N):
    for k in (2, 4, 6, 8, 12):
        assert dim_cusp(k, N) == cohen_oesterle_dim(k, N), (k, N)


@pytest.mark.parametrize("N", range(1, 61))
def test_dim_new_inverts_old_space(N):
    # dim S_k(N) = sum_{M | N} sigma0(N/M) dim S_k^new(M)
    for k in (2, 4, 12):
        assert dim_cusp(k, N) == sum(arith.sigma0(N // M) * dim_new(k, M) for M in arith.divisors(N))


def test_beta_values():
    assert [beta(m) for m in range(1, 10)] == [1, -2, -2, 1, -2, 4, -2, 0, 1]


def test_gegenbauer_small():
    assert gegenbauer_weight(2, 5, 3) == 1
    assert gegenbauer_weight(4, 1, 2) == 1 - 2
    assert gegenbauer_weight(12, 0, 1) == -1


def test_dims_examples():
    assert dim_new(2, 125) == 8
    assert dim_new(2, 11) == 1
    assert dim_cusp(2, 1) == 0
    assert dim_cusp(12, 1) == 1


def test_query_validation():
    with pytest.raises(ValueError):
        TraceQuery(3, 11, 2)
    with pytest.raises(ValueError):
        TraceQuery(2, 0, 1)
    with pytest.raises(UnsupportedQuery):
        TraceQuery(2, 11, 22)


def test_result_int():
    r = trace_new(TraceQuery(2, 11, 2))
    assert int(r) == -2
    assert r.side == "new"


def _tp_charpoly(k, N, p):
    """Characteristic polynomial of T_p on the new space from traces of T_{p^i} via Newton's identities."""
    from autfam.plancherel import power_in_u_basis

    m = dim_new(k, N)
    tr = [trace_new(TraceQuery(k, N, p**i)).value for i in range(m + 1)]
    P = [sum(c * Fraction(p) ** ((k - 1) * (j - i) // 2) * tr[i] for i, c in power_in_u_basis(j).items()) for j in range(m + 1)]
    e = [Fraction(1)]
    for j in range(1, m + 1):
        e.append(sum((-1) ** (i - 1) * e[j - i] * P[i] for i in range(1, j + 1)) / j)
    return [(-1) ** j * e[j] for j in range(m + 1)]


@pytest.mark.parametrize("k,N,p", [(2, 125, 2), (2, 125, 3), (4, 25, 2), (2, 63, 2), (2, 175, 3)])
def test_hecke_polynomial_integral_and_deligne(k, N, p):
    import numpy as np

    c = _tp_charpoly(k, N, p)
    assert all(x.denominator == 1 for x in c)
    roots = np.roots([float(x) for x in c])
    assert np.all(np.abs(roots.imag) < 1e-6)
    assert np.all(np.abs(roots.real) <= 2 * p ** ((k - 1) / 2) + 1e-9)
