"""Tree enumeration and orbital integrals, checked against direct conjugation and fiber scans."""

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from autfam import arith
from autfam import bruhat_tits as bt
from autfam.bruhat_tits import PadicMatrix


def v(x, p):
    return arith.padic_valuation(Fraction(x), p)


def conj(g, gamma):
    """g^-1 gamma g with Fractions."""
    a, b, c, d = g
    det = Fraction(a * d - b * c)
    gi = (d / det, -b / det, -c / det, a / det)
    e = gamma.entries
    m = bt._mul(gi, e)
    return bt._mul(m, g)


def in_center_times_Ks(delta, p, s):
    vmin = min(v(x, p) for x in delta if x != 0)
    u = [x / Fraction(p) ** vmin for x in delta]
    if v(u[0] * u[3] - u[1] * u[2], p) != 0:
        return False
    if s == 0:
        return True
    return v(u[0] - u[3], p) >= s and v(u[1], p) >= s and v(u[2], p) >= s


def in_Ks(delta, p, s):
    if any(v(x, p) < 0 for x in delta):
        return False
    if s == 0:
        return True
    return v(delta[0] - 1, p) >= s and v(delta[3] - 1, p) >= s and v(delta[1], p) >= s and v(delta[2], p) >= s


def brute_orbital_Ks(gamma, s, R):
    p = gamma.p
    count = 0
    for vert in bt.enumerate_ball(p, R):
        delta = conj(vert.matrix(), gamma)
        if gamma.group == "PGL2":
            count += in_center_times_Ks(delta, p, s)
        elif vert.distance % 2 == 0:
            count += in_Ks(delta, p, s)
    return count


def brute_orbital_lie(X, s, R, group):
    p = X.p
    count = 0
    for vert in bt.enumerate_ball(p, R):
        if group == "SL2" and vert.distance % 2:
            continue
        Y = conj(vert.matrix(), X)
        count += all(y == 0 or v(y, p) >= s for y in Y)
    return count


# --------------------------------------------------------------------------- tree


@pytest.mark.parametrize("p,R", [(3, r) for r in range(9)] + [(5, r) for r in range(8)] + [(7, r) for r in range(6)])
def test_ball_count(p, R):
    ball = bt.enumerate_ball(p, R)
    assert len(ball) == bt.ball_size(p, R) == 1 + (p + 1) * (p**R - 1) // (p - 1)
    assert len({(x.a, x.b, x.c) for x in ball}) == len(ball)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sphere_sizes_and_distances(p):
    for d in range(1, 5):
        sph = list(bt.sphere(p, d))
        assert len(sph) == (p + 1) * p ** (d - 1)
        for x in sph:
            assert bt.cartan_distance(x.matrix(), p) == d


def test_tree_examples_and_guards():
    assert len(bt.enumerate_ball(3, 0)) == 1
    assert len(bt.enumerate_ball(3, 1)) == 5
    assert len(bt.enumerate_ball(5, 2)) == 37
    with pytest.raises(bt.RadiusGuardExceeded):
        bt.enumerate_ball(3, 13)
    with pytest.raises(bt.RadiusGuardExceeded):
        bt.enumerate_ball(7, 8)
    with pytest.raises(ValueError):
        bt.enumerate_ball(2, 1)


def test_neighbours_are_adjacent():
    p = 3
    for x in bt.sphere(p, 2):
        nbrs = [y for y in bt.enumerate_ball(p, 3) if bt.cartan_distance(bt._mul(bt._adj(x.matrix()), y.matrix()), p) == 1]
        assert len(nbrs) == p + 1


# --------------------------------------------------------------------------- invariants


def ad_discriminant_valuation(gamma):
    """v_p of det(1 - Ad gamma) on gl2 / centralizer, from the characteristic polynomial of Ad."""
    x = sympy.Symbol("x")
    g = sympy.Matrix(2, 2, [sympy.Rational(e.numerator, e.denominator) for e in gamma.entries])
    gi = g.inv()
    basis = [sympy.Matrix(2, 2, [int(i == j) for j in range(4)]) for i in range(4)]
    cols = [list(g * E * gi) for E in basis]
    Ad = sympy.Matrix(4, 4, lambda r, c: cols[c][r])
    P = sympy.factor(Ad.charpoly(x).as_expr())
    Q = sympy.cancel(P / (x - 1) ** 2)
    val = sympy.Rational(Q.subs(x, 1))
    return arith.padic_valuation(Fraction(int(val.p), int(val.q)), gamma.p)


GAMMAS = [
    PadicMatrix(0, 1, -1, 0, p=3),
    bt.gamma_m(3, 1),
    bt.gamma_m(3, 2),
    bt.gamma_m(5, 1),
    bt.gamma_m(7, 2),
    PadicMatrix(1, 3, 9, 1, p=3),
    PadicMatrix(2, 1, 1, 3, p=5),
    PadicMatrix(1, 5, 10, 1, p=5),
    PadicMatrix(0, 1, 2, 0, p=5),
    PadicMatrix(2, 3, -3, 2, p=3),
]


@pytest.mark.parametrize("gamma", GAMMAS, ids=str)
def test_weyl_discriminant_against_adjoint(gamma):
    inv = bt.invariants(gamma)
    assert ad_discriminant_valuation(gamma) == inv.D_valuation
    assert bt.weyl_discriminant(gamma) == Fraction(gamma.p) ** (-inv.D_valuation)
    assert inv.md <= inv.sd


def test_invariants_examples():
    J = bt.invariants(PadicMatrix(0, 1, -1, 0, p=3))
    assert (J.torus, J.D_valuation, J.md) == ("unramified", 0, 0)
    for m in (1, 2, 3):
        inv = bt.invariants(PadicMatrix(1, 3**m, -(3**m), 1, p=3))
        assert (inv.torus, inv.md, inv.D_valuation) == ("unramified", m, 2 * m)
    split = bt.invariants(PadicMatrix(1, 0, 0, 3, p=3))
    assert split.torus == "split" and not split.elliptic
    with pytest.raises(bt.NotElliptic):
        bt.decay_profile(PadicMatrix(1, 0, 0, 3, p=3), 2)
    with pytest.raises(bt.CentralElement):
        bt.invariants(PadicMatrix(2, 0, 0, 2, p=3))
    with pytest.raises(bt.NotSemisimple):
        bt.invariants(PadicMatrix(1, 1, 0, 1, p=3))


def test_split_element_has_unbounded_fixed_set():
    g = PadicMatrix(4, 9, -3, 1, p=3)
    assert bt.invariants(g).torus == "split"
    with pytest.raises(bt.RadiusGuardExceeded):
        bt.certify(g)


def test_torus_epsilon():
    assert bt.torus_epsilon(3) == -1
    assert bt.torus_epsilon(7) == -1
    assert bt.torus_epsilon(5) == 2
    assert bt.torus_epsilon(13) == 2
    for p in (5, 13, 17):
        e = bt.torus_epsilon(p)
        assert arith.kronecker(e % p, p) == -1


def test_sl2_validation():
    with pytest.raises(ValueError):
        PadicMatrix(1, 1, 1, 3, p=3, group="SL2")
    with pytest.raises(ValueError):
        PadicMatrix(1, 2, 2, 4, p=3)


# --------------------------------------------------------------------------- K_s integrals


@pytest.mark.parametrize("gamma", GAMMAS, ids=str)
def test_orbital_Ks_against_direct_conjugation(gamma):
    cert = bt.certify(gamma)
    R = (cert.radius or 0) + 1
    for s in range(0, 4):
        assert bt.orbital_Ks(gamma, s) == brute_orbital_Ks(gamma, s, R), s


@pytest.mark.parametrize("gamma", GAMMAS, ids=str)
def test_radius_stability(gamma):
    cert = bt.certify(gamma)
    if cert.radius is None:
        assert bt.orbital_Ks(gamma, 0) == 0
        return
    assert cert.checked_radius == cert.radius + 1
    for s in range(3):
        assert bt.orbital_Ks(gamma, s, radius=cert.radius) == bt.orbital_Ks(gamma, s, radius=cert.radius + 1)
        assert brute_orbital_Ks(gamma, s, cert.radius) == brute_orbital_Ks(gamma, s, cert.radius + 1)


def test_orbital_Ks_examples():
    J = PadicMatrix(0, 1, -1, 0, p=3)
    assert bt.orbital_Ks(J, 1) == 0
    assert bt.orbital_Ks(PadicMatrix(5, 0, 0, 5, p=3), 4) == 1
    g1 = bt.gamma_m(3, 1)
    assert [bt.orbital_Ks(g1, s) for s in range(3)] == [5, 1, 0]


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_support_and_ball_profile(p, m):
    g = bt.gamma_m(p, m)
    sd = int(bt.invariants(g).sd)
    for s in range(m + 1):
        assert bt.orbital_Ks(g, s) == bt.ball_size(p, m - s)
    for s in range(sd + 1, sd + 4):
        assert bt.orbital_Ks(g, s) == 0


def test_sl2_orbital_against_direct_conjugation():
    for p in (3, 5):
        for m in (1, 2):
            for X in (bt.unramified_X(p, m), bt.ramified_X(p, m)):
                gamma = bt.cayley(X, "SL2")
                R = bt.certify(gamma).radius + 1
                for s in range(0, m + 2):
                    assert bt.orbital_Ks(gamma, s) == brute_orbital_Ks(gamma, s, R)


# --------------------------------------------------------------------------- T_t K_s integrals


SCAN_CASES = [
    (bt.gamma_m(3, 1), 3),
    (bt.gamma_m(3, 2), 3),
    (bt.gamma_m(5, 1), 2),
    (bt.gamma_m(7, 1), 2),
    (PadicMatrix(0, 1, -1, 0, p=3), 3),
    (PadicMatrix(1, 3, 9, 1, p=3), 3),
    (PadicMatrix(2, 1, 1, 3, p=5), 2),
    (PadicMatrix(1, 5, 10, 1, p=5), 2),
    (PadicMatrix(0, 1, 2, 0, p=5), 2),
]


@pytest.mark.parametrize("gamma,smax", SCAN_CASES, ids=lambda x: str(x))
def test_fiber_scan_matches_closed_form(gamma, smax):
    for s in range(smax + 1):
        for t in range(s + 1):
            assert bt.orbital_TtKs(gamma, t, s) == bt.orbital_TtKs(gamma, t, s, method="closed"), (t, s)


@pytest.mark.parametrize("gamma,smax", SCAN_CASES, ids=lambda x: str(x))
def test_TtKs_monotone(gamma, smax):
    for s in range(smax + 1):
        vals = [bt.orbital_TtKs(gamma, t, s, method="closed") for t in range(s + 1)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert vals[-1] >= bt.orbital_Ks(gamma, s)
    assert bt.orbital_TtKs(gamma, 0, 0) >= bt.orbital_Ks(gamma, 0)


def test_TtKs_order_four_element():
    J = PadicMatrix(0, 1, -1, 0, p=3)
    # J lies in the torus itself, so L_2 = T K_2 meets its orbit at the base vertex
    assert bt.orbital_TtKs(J, 0, 2) == Fraction(1, 27)
    assert bt.orbital_TtKs(J, 0, 2, method="closed") == Fraction(1, 27)


def test_TtKs_guards():
    g = bt.gamma_m(7, 1)
    with pytest.raises(bt.FiberGuardExceeded):
        bt.orbital_TtKs(g, 0, 3)
    with pytest.raises(ValueError):
        bt.orbital_TtKs(g, 2, 1)
    with pytest.raises(ValueError):
        bt.orbital_TtKs(bt.cayley(bt.unramified_X(7, 1), "SL2"), 0, 1)


# --------------------------------------------------------------------------- Cayley map and descent


def test_cayley_roundtrip():
    for p in (3, 5, 7):
        for m in (1, 2):
            for X in (bt.unramified_X(p, m), bt.ramified_X(p, m), PadicMatrix(p, p**2, 2 * p, -p, p=p)):
                for group in ("SL2", "PGL2"):
                    g = bt.cayley(X, group)
                    assert g.det == 1
                    assert bt.cayley_inverse(g).entries == X.entries


def test_cayley_domain():
    with pytest.raises(bt.CayleyDomainError):
        bt.cayley(PadicMatrix(1, 1, 1, -2, p=3))
    with pytest.raises(bt.CayleyDomainError):
        bt.cayley(PadicMatrix(0, 1, -1, 0, p=3))
    with pytest.raises(bt.CentralElement):
        bt.lie_element((0, 0, 0, 0), 3)


def test_descent_examples():
    X = PadicMatrix(0, 3, -3, 0, p=3)
    r1 = bt.descent_check(bt.cayley(X, "SL2"), 1)
    assert r1.ok and r1.group_side > 0
    r2 = bt.descent_check(bt.cayley(X, "SL2"), 2)
    assert r2.ok and r2.group_side == 0 == r2.lie_side


@pytest.mark.parametrize("group", ["SL2", "PGL2"])
def test_lie_side_against_direct_conjugation(group):
    for p in (3, 5):
        for X in (bt.unramified_X(p, 1), bt.ramified_X(p, 1), bt.unramified_X(p, 2)):
            one_plus = PadicMatrix(1 + X.a, X.b, X.c, 1 + X.d, p=p)
            R = bt.certify(one_plus).radius + 1
            for s in range(1, 4):
                assert bt.orbital_lie(X, s, group) == brute_orbital_lie(X, s, R, group)


# --------------------------------------------------------------------------- profiles


def test_half_power():
    h = bt.HalfPower.make(Fraction(5), -3, 3)
    assert (h.r, h.k) == (Fraction(5, 3), -1)
    assert h.render() == "5/3*p^(-1/2)"
    assert h.square() == Fraction(25, 27)
    assert abs(float(h) - 5 / 3 / math.sqrt(3)) < 1e-15
    assert bt.HalfPower.make(Fraction(1), -2, 3).render() == "1/3"
    assert bt.HalfPower.make(Fraction(9), -3, 3).render() == "3*p^(-1/2)"
    assert bt.HalfPower.make(Fraction(0), -3, 3).render() == "0"
    assert h.cmp(h.scale(Fraction(1, 2))) == 1


def test_profile_gamma2_p3():
    prof = bt.decay_profile(bt.gamma_m(3, 2), 6)
    assert prof.flags == []
    a = [r.a_s for r in prof.rows]
    for s in range(4, 7):
        assert a[s].cmp(a[s - 1].scale(Fraction(1, 3))) <= 0
    C = a[0].scale(9)
    for s, x in enumerate(a):
        assert x.cmp(C.scale(Fraction(1, 3**s))) <= 0


def test_profile_flags_small_constant():
    prof = bt.decay_profile(bt.gamma_m(3, 1), 3, C1=Fraction(1, 100))
    assert any("C1" in f for f in prof.flags)
    prof = bt.decay_profile(bt.gamma_m(3, 1), 3, C1=Fraction(100))
    assert prof.flags == []


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_profile_closed_values(p, m):
    prof = bt.decay_profile(bt.gamma_m(p, m), m + 3)
    for r in prof.rows:
        if r.s <= m:
            assert r.raw_K == r.raw_L == bt.ball_size(p, m - r.s)
        else:
            assert r.raw_K == 0
            assert r.raw_L == Fraction(2, p - 1) * Fraction(p) ** (2 * m - 2 * r.s + 1)
        assert r.a_s.square() == r.raw_L**2 / Fraction(p) ** (2 * m)


def test_cli_orbital_example_values():
    prof = bt.decay_profile(PadicMatrix(1, 3, -3, 1, p=3), 4)
    assert [r.raw_K for r in prof.rows] == [5, 1, 0, 0, 0]
    assert all(r.a_K.r == 0 for r in prof.rows[2:])


# --------------------------------------------------------------------------- random elements


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.sampled_from([3, 5]))
def test_random_elliptic(a, b, c, d, p):
    from hypothesis import assume

    assume(a * d - b * c != 0)
    g = PadicMatrix(a, b, c, d, p=p)
    assume(not g.is_scalar() and g.disc != 0)
    inv = bt.invariants(g)
    assume(inv.elliptic)
    assert ad_discriminant_valuation(g) == inv.D_valuation
    cert = bt.certify(g)
    R = (cert.radius or 0) + 1
    assume(bt.ball_size(p, R) < 2000)
    for s in range(3):
        assert bt.orbital_Ks(g, s) == brute_orbital_Ks(g, s, R)
