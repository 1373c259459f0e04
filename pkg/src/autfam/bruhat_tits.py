"""Orbital integrals on the Bruhat-Tits tree of PGL(2, Q_p) and SL(2, Q_p), p odd.

Vertices of the tree are homothety classes of Z_p-lattices.  A vertex at
distance d from the standard lattice L0 = Z_p^2 is represented by its column
Hermite normal form

    g = [[p^a, b], [0, p^c]],   a + c = d,  0 <= b < p^a,  min(a, c, v(b)) = 0,

so that g L0 is the unique lattice in the class contained in L0 with cyclic
quotient of order p^d.

Measures: vol(K0) = 1 on G and vol(T) = 1 on the (compact mod center)
centralizer T of an elliptic element.  With these conventions

    O_gamma(f) = sum over vertices v of  int_{K0} f(k^-1 g_v^-1 gamma g_v k) dk

for any f supported in Z K0, which turns every orbital integral below into
a finite, exact sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import arith

MAX_RADIUS_SMALL_P = 12  # for p <= 7
MAX_BALL_VERTICES = 3_000_000
MAX_FIBER = 10**6  # guard on p^{3s} for the elementwise fiber scan


class CentralElement(ValueError):
    pass


class NotSemisimple(ValueError):
    pass


class NotElliptic(ValueError):
    pass


class RadiusGuardExceeded(RuntimeError):
    def __init__(self, p: int, required: int, limit: int):
        super().__init__(f"p = {p}: certification needs radius >= {required}, guard allows {limit}")
        self.p, self.required, self.limit = p, required, limit


class FiberGuardExceeded(RuntimeError):
    pass


class CayleyDomainError(ValueError):
    pass


def _check_p(p: int) -> None:
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p = 2 is not supported")


def _v(x: int, p: int):
    return arith.vint(x, p)


def _legendre(a: int, p: int) -> int:
    return arith.kronecker(a % p, p)


def torus_epsilon(p: int) -> int:
    """Non-residue used for the standard unramified torus {a + bJ}, J = [[0, 1], [eps, 0]]."""
    _check_p(p)
    if p % 4 == 3:
        return -1
    e = 2
    while _legendre(e, p) != -1:
        e += 1
    return e


# --------------------------------------------------------------------------- matrices


@dataclass(frozen=True)
class PadicMatrix:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: int
    group: str = "PGL2"

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        _check_p(self.p)
        if self.group not in ("SL2", "PGL2"):
            raise ValueError(f"unknown group {self.group!r}")
        if self.det == 0:
            raise ValueError("matrix is singular")
        if self.group == "SL2" and self.det != 1:
            raise ValueError(f"determinant {self.det} != 1 for an SL2 element")

    @classmethod
    def parse(cls, text: str, p: int, group: str = "PGL2") -> "PadicMatrix":
        parts = [Fraction(x.strip()) for x in text.split(",")]
        if len(parts) != 4:
            raise ValueError("expected four comma-separated entries a,b,c,d")
        return cls(*parts, p=p, group=group)

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> Fraction:
        return self.a + self.d

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def disc(self) -> Fraction:
        return self.trace**2 - 4 * self.det

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def integral(self) -> tuple[tuple[int, int, int, int], int]:
        """(Gamma, c) with self = Gamma / c and Gamma integral."""
        c = math.lcm(*(x.denominator for x in self.entries))
        return tuple(int(x * c) for x in self.entries), c

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


def _mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _adj(x):
    a, b, c, d = x
    return (d, -b, -c, a)


def _inverse(x):
    a, b, c, d = x
    det = a * d - b * c
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    return tuple(Fraction(y) / det for y in _adj(x))


def cayley(X: PadicMatrix, group: str = "SL2") -> PadicMatrix:
    """(1 + X/2)(1 - X/2)^-1 for trace-zero, topologically nilpotent X."""
    _check_cayley_domain(X)
    h = [x / 2 for x in X.entries]
    plus = (1 + h[0], h[1], h[2], 1 + h[3])
    minus = (1 - h[0], -h[1], -h[2], 1 - h[3])
    return PadicMatrix(*_mul(plus, _inverse(minus)), p=X.p, group=group)


def cayley_inverse(gamma: PadicMatrix) -> PadicMatrix:
    """X = 2 (gamma - 1)(gamma + 1)^-1, the inverse of ``cayley`` on SL2."""
    e = gamma.entries
    minus = (e[0] - 1, e[1], e[2], e[3] - 1)
    if not any(minus):
        raise CentralElement("gamma = 1 has X = 0")
    plus = (e[0] + 1, e[1], e[2], e[3] + 1)
    return PadicMatrix(*(2 * x for x in _mul(minus, _inverse(plus))), p=gamma.p, group="PGL2")


def _check_cayley_domain(X: PadicMatrix) -> None:
    if all(x == 0 for x in X.entries):
        raise CentralElement("X = 0 is central; the orbit is a point")
    if X.trace != 0:
        raise CayleyDomainError("X must have trace zero")
    if not arith.padic_valuation(X.a * X.d - X.b * X.c, X.p) > 0:
        raise CayleyDomainError("X must be topologically nilpotent (v(det X) > 0)")


def lie_element(entries, p: int) -> PadicMatrix:
    """Trace-zero Lie algebra element.  Stored as a PadicMatrix only when invertible."""
    a, b, c, d = (Fraction(x) for x in entries)
    if a + d != 0:
        raise CayleyDomainError("X must have trace zero")
    if a * d - b * c == 0:
        if a == b == c == 0:
            raise CentralElement("X = 0 is central; the orbit is a point")
        raise NotSemisimple("X is nilpotent")
    return PadicMatrix(a, b, c, d, p=p, group="PGL2")


# --------------------------------------------------------------------------- invariants


@dataclass(frozen=True)
class EllipticInvariants:
    D_valuation: int  # D(gamma) = p^(-D_valuation)
    md: Fraction
    sd: Fraction
    torus: str  # "unramified", "ramified", "split"

    @property
    def elliptic(self) -> bool:
        return self.torus != "split"


def torus_type(disc: Fraction, p: int) -> str:
    v = arith.padic_valuation(disc, p)
    if v % 2:
        return "ramified"
    unit = disc / Fraction(p) ** v
    u = unit.numerator * pow(unit.denominator, -1, p) % p
    return "split" if _legendre(u, p) == 1 else "unramified"


def invariants(gamma: PadicMatrix) -> EllipticInvariants:
    p = gamma.p
    disc = gamma.disc
    if disc == 0:
        if gamma.is_scalar():
            raise CentralElement("gamma is central")
        raise NotSemisimple("gamma has a repeated eigenvalue but is not scalar")
    vdisc = arith.padic_valuation(disc, p)
    vdet = arith.padic_valuation(gamma.det, p)
    kind = torus_type(disc, p)
    half = Fraction(vdisc, 2)
    if kind != "split" or vdisc >= vdet:
        va = vb = Fraction(vdet, 2)
    else:
        # distinct eigenvalue valuations: v(alpha - alpha') is the smaller one
        va, vb = half, vdet - half
    # nu(alpha/alpha' - 1) and nu(alpha'/alpha - 1)
    values = (half - vb, half - va)
    nonzero = [x for x in values if x != 0]
    md = min(nonzero) if nonzero else Fraction(0)
    return EllipticInvariants(vdisc - vdet, md, max(values), kind)


def weyl_discriminant(gamma: PadicMatrix) -> Fraction:
    """D(gamma) = |t^2 - 4 det|_p / |det|_p as an exact rational power of p."""
    inv = invariants(gamma)
    return Fraction(gamma.p) ** (-inv.D_valuation)


# --------------------------------------------------------------------------- tree


@dataclass(frozen=True, order=True)
class TreeVertex:
    distance: int
    a: int
    b: int
    c: int
    p: int

    def matrix(self) -> tuple[int, int, int, int]:
        return (self.p**self.a, self.b, 0, self.p**self.c)


def ball_size(p: int, R: int) -> int:
    if R == 0:
        return 1
    return 1 + (p + 1) * (p**R - 1) // (p - 1)


def sphere(p: int, d: int):
    """Vertices at distance exactly d, in a fixed deterministic order."""
    if d == 0:
        yield TreeVertex(0, 0, 0, 0, p)
        return
    for a in range(d + 1):
        c = d - a
        pa = p**a
        for b in range(pa):
            if a and c and b % p == 0:
                continue
            if c == d and b:
                continue
            yield TreeVertex(d, a, b, c, p)


def _radius_limit(p: int) -> int:
    if p <= 7:
        return MAX_RADIUS_SMALL_P
    R = 0
    while ball_size(p, R + 1) <= MAX_BALL_VERTICES:
        R += 1
    return R


def _guard_radius(p: int, R: int) -> None:
    limit = _radius_limit(p)
    if R > limit or ball_size(p, R) > MAX_BALL_VERTICES:
        raise RadiusGuardExceeded(p, R, min(limit, R - 1))


def enumerate_ball(p: int, R: int) -> list[TreeVertex]:
    _check_p(p)
    if R < 0:
        raise ValueError("radius must be >= 0")
    _guard_radius(p, R)
    return [v for d in range(R + 1) for v in sphere(p, d)]


def cartan_distance(G: tuple[int, int, int, int], p: int) -> int:
    """d(L0, G L0) for an integral invertible G."""
    a, b, c, d = G
    vmin = min(_v(x, p) for x in G if x != 0)
    return _v(a * d - b * c, p) - 2 * vmin


# --------------------------------------------------------------------------- fixed vertices


@dataclass(frozen=True)
class FixedVertex:
    vertex: TreeVertex
    M: tuple[int, int, int, int]  # adj(g) Gamma g / p^minval, primitive with unit det
    e: float | int  # valuation of the trace-zero part of M
    symbol: int  # Legendre class of -det(M_1) * eps, 0 if M_1 has non-unit det


def _fixed_record(v: TreeVertex, G, p: int, eps: int) -> FixedVertex | None:
    g = v.matrix()
    M = _mul(_mul(_adj(g), G), g)
    vmin = min(_v(x, p) for x in M if x != 0)
    scale = p**vmin
    M = tuple(x // scale for x in M)
    if _v(M[0] * M[3] - M[1] * M[2], p) != 0:
        return None
    x = M[0] - M[3]
    e = min(_v(x, p), _v(M[1], p), _v(M[2], p))
    symbol = 0
    if e != math.inf:
        N = x * x + 4 * M[1] * M[2]  # = -4 p^{2e} det(M_1)
        if _v(N, p) == 2 * e:
            symbol = _legendre((N // p ** (2 * e)) * eps, p)
    return FixedVertex(v, M, e, symbol)


@dataclass
class Certificate:
    """Fixed vertices of gamma together with the radius that certifies completeness."""

    gamma: PadicMatrix
    radius: int | None  # None when gamma inverts an edge (no fixed vertex)
    displacement: int
    fixed: list[FixedVertex] = field(default_factory=list)
    checked_radius: int = 0  # ball actually enumerated (radius + 1 when certified)

    def fixed_within(self, R: int) -> list[FixedVertex]:
        return [f for f in self.fixed if f.vertex.distance <= R]


@lru_cache(maxsize=256)
def certify(gamma: PadicMatrix) -> Certificate:
    """Enumerate Fix(gamma) and certify that no fixed vertex lies outside the ball.

    Fix(gamma) is a subtree and d(L0, Fix) = d(L0, gamma L0)/2.  If the
    displacement is odd gamma inverts an edge and fixes no vertex.  Otherwise
    spheres are scanned outward; the first empty sphere at distance >= that
    half-displacement + 1 bounds Fix by convexity.  The next sphere is then
    scanned as well and must also be empty.
    """
    p = gamma.p
    G, _ = gamma.integral()
    disp = cartan_distance(G, p)
    if disp % 2:
        return Certificate(gamma, None, disp)
    eps = torus_epsilon(p)
    r_min = disp // 2
    fixed: list[FixedVertex] = []
    d = 0
    radius = None
    while True:
        _guard_radius(p, d)
        hits = [rec for v in sphere(p, d) if (rec := _fixed_record(v, G, p, eps)) is not None]
        if radius is None:
            fixed.extend(hits)
            if not hits and d >= r_min + 1:
                radius = d
        else:
            if hits:
                raise ArithmeticError(f"fixed vertex beyond certified radius {radius}: convexity violated")
            return Certificate(gamma, radius, disp, fixed, d)
        d += 1


# --------------------------------------------------------------------------- K_s integrals


def _sl2_depth(rec: FixedVertex, gamma: PadicMatrix) -> float | int:
    """min v(delta - 1) with delta = g^-1 gamma g computed exactly in SL2."""
    p = gamma.p
    G, c = gamma.integral()
    v = rec.vertex
    g = v.matrix()
    M = _mul(_mul(_adj(g), G), g)  # = c p^d delta
    shift = _v(c, p) + v.distance
    scal = c * p**v.distance
    vals = [_v(M[0] - scal, p), _v(M[1], p), _v(M[2], p), _v(M[3] - scal, p)]
    return min(vals) - shift


def orbital_Ks(gamma: PadicMatrix, s: int, radius: int | None = None) -> Fraction:
    """O_gamma(1_{Z K_s}) for PGL2, O_gamma(1_{K_s}) for SL2 (K_s = 1 + p^s M_2(Z_p), K_0 maximal).

    ``radius`` restricts the sum to a ball (used for the stability check);
    by default the certified ball is used.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    if gamma.is_scalar():
        if gamma.group == "PGL2":
            return Fraction(1)
        return Fraction(1 if gamma.a == 1 or s == 0 else 0)
    invariants(gamma)  # rejects unipotents
    cert = certify(gamma)
    if cert.radius is None:
        return Fraction(0)
    R = cert.radius if radius is None else radius
    recs = cert.fixed_within(R)
    if gamma.group == "PGL2":
        return Fraction(sum(1 for r in recs if r.e >= s))
    return Fraction(sum(1 for r in recs if r.vertex.distance % 2 == 0 and _sl2_depth(r, gamma) >= s))


# --------------------------------------------------------------------------- T_t K_s integrals


def fiber_fraction_closed(rec: FixedVertex, p: int, t: int, s: int) -> Fraction:
    """vol{k in K0 : k^-1 delta k in Z T_t K_s} for delta = rec.M.

    The trace-zero part of delta is p^e delta_1 with delta_1 primitive.
    If e >= s every conjugate is scalar mod p^s.  Otherwise a conjugate lies
    in T_t K_s iff it equals a + p^e c J mod p^s with p^t | p^e c, which needs
    e >= t and delta_1 conjugate to c J mod p^{s-e}; that happens for exactly
    two classes c when -eps det(delta_1) is a unit square, each with
    centralizer of relative size 1/(p(p-1) p^{2(s-e-1)}).
    """
    e = rec.e
    if e >= s:
        return Fraction(1)
    if e < t or rec.symbol != 1:
        return Fraction(0)
    return Fraction(2, p - 1) * Fraction(p) ** (2 * e - 2 * s + 1)


def fiber_fraction_scan(M, p: int, t: int, s: int, eps: int) -> Fraction:
    """Same quantity by scanning every k in GL2(Z/p^s)."""
    if p ** (3 * s) > MAX_FIBER:
        raise FiberGuardExceeded(f"fiber scan needs p^(3s) = {p ** (3 * s)} > {MAX_FIBER}")
    if s == 0:
        return Fraction(1)
    q = p**s
    pt = p**t
    d11, d12, d21, d22 = (int(x) % q for x in M)
    r = np.arange(q, dtype=np.int64)
    k11, k12 = (x.ravel() for x in np.meshgrid(r, r, indexing="ij"))
    hits = 0
    total = 0
    for k21 in range(q):
        for k22 in range(q):
            det = (k11 * k22 - k12 * k21) % q
            unit = det % p != 0
            # delta k
            a = (d11 * k11 + d12 * k21) % q
            b = (d11 * k12 + d12 * k22) % q
            c = (d21 * k11 + d22 * k21) % q
            d = (d21 * k12 + d22 * k22) % q
            # adj(k) (delta k); adj(k) = [[k22, -k12], [-k21, k11]]
            m11 = (k22 * a - k12 * c) % q
            m12 = (k22 * b - k12 * d) % q
            m21 = (-k21 * a + k11 * c) % q
            m22 = (-k21 * b + k11 * d) % q
            ok = unit & ((m11 - m22) % q == 0) & ((m21 - eps * m12) % q == 0) & (m12 % pt == 0)
            hits += int(ok.sum())
            total += int(unit.sum())
    return Fraction(hits, total)


def orbital_TtKs(gamma: PadicMatrix, t: int, s: int, method: str = "scan", radius: int | None = None) -> Fraction:
    """O_gamma(1_{Z T_t K_s}) for the standard unramified torus T = {a + bJ} at L0.

    T_t = {a + bJ : p^t | b} modulo the center, so t = 0 gives the
    characteristic function of L_s = T K_s.  ``method="scan"`` counts every
    element of each fiber K0/K_s (guarded by p^{3s} <= 10^6);
    ``method="closed"`` uses the per-vertex closed form.
    """
    if not 0 <= t <= s:
        raise ValueError("need 0 <= t <= s")
    if gamma.group != "PGL2":
        raise ValueError("T_t K_s integrals are implemented for PGL2")
    if gamma.is_scalar():
        return Fraction(1)
    invariants(gamma)
    cert = certify(gamma)
    if cert.radius is None:
        return Fraction(0)
    p = gamma.p
    eps = torus_epsilon(p)
    R = cert.radius if radius is None else radius
    total = Fraction(0)
    memo: dict = {}
    for rec in cert.fixed_within(R):
        if method == "closed":
            total += fiber_fraction_closed(rec, p, t, s)
        elif method == "scan":
            key = tuple(x % p**s for x in rec.M) if s else ()
            if key not in memo:
                memo[key] = fiber_fraction_scan(rec.M, p, t, s, eps)
            total += memo[key]
        else:
            raise ValueError(f"unknown method {method!r}")
    return total


# --------------------------------------------------------------------------- Lie side


def orbital_lie(X: PadicMatrix, s: int, group: str = "SL2", radius: int | None = None) -> Fraction:
    """#{v : Ad(g_v^-1) X in p^s M_2(Z_p)} (even-distance vertices only for SL2).

    The set is contained in {v : X L_v in L_v} = Fix(1 + X), whose certified
    radius bounds the enumeration.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    _check_cayley_domain(X)
    p = X.p
    one_plus = PadicMatrix(1 + X.a, X.b, X.c, 1 + X.d, p=p, group="PGL2")
    cert = certify(one_plus)
    if cert.radius is None:
        return Fraction(0)
    R = cert.radius if radius is None else radius
    Xi, c = X.integral()
    vc = _v(c, p)
    count = 0
    for v in enumerate_ball(p, R):
        if group == "SL2" and v.distance % 2:
            continue
        g = v.matrix()
        Y = _mul(_mul(_adj(g), Xi), g)  # = c p^d g^-1 X g
        if min(_v(y, p) for y in Y) - vc - v.distance >= s:
            count += 1
    return Fraction(count)


@dataclass(frozen=True)
class DescentResult:
    s: int
    group_side: Fraction
    lie_side: Fraction

    @property
    def ok(self) -> bool:
        return self.group_side == self.lie_side


def descent_check(gamma: PadicMatrix, s: int) -> DescentResult:
    """Compare O_gamma(1_{G_{x,s}}) with O_X(1_{g_{x,s}}) for gamma = cay(X)."""
    X = cayley_inverse(gamma)
    _check_cayley_domain(X)
    return DescentResult(s, orbital_Ks(gamma, s), orbital_lie(X, s, gamma.group))


# --------------------------------------------------------------------------- decay profiles


@dataclass(frozen=True, order=True)
class HalfPower:
    """r * p^(k/2) with r rational and k in {0, -1}."""

    r: Fraction
    k: int
    p: int

    @classmethod
    def make(cls, r: Fraction, twice_exp: int, p: int) -> "HalfPower":
        # fold the integral part of the exponent into r
        k = -(twice_exp % 2)
        r = Fraction(r) * Fraction(p) ** ((twice_exp - k) // 2)
        return cls(r, k, p)

    def square(self) -> Fraction:
        return self.r * self.r * Fraction(self.p) ** self.k

    def __float__(self) -> float:
        return float(self.r) * self.p ** (self.k / 2)

    def cmp(self, other: "HalfPower") -> int:
        a, b = self.square(), other.square()
        return (a > b) - (a < b)

    def scale(self, x: Fraction) -> "HalfPower":
        return HalfPower(self.r * Fraction(x), self.k, self.p)

    def render(self) -> str:
        r = str(self.r.numerator) if self.r.denominator == 1 else f"{self.r.numerator}/{self.r.denominator}"
        if self.k == 0 or self.r == 0:
            return r
        return f"{r}*p^({self.k}/2)"


@dataclass(frozen=True)
class ProfileRow:
    s: int
    raw_K: Fraction
    raw_L: Fraction
    a_K: HalfPower
    a_s: HalfPower


@dataclass
class OrbitalProfile:
    gamma: PadicMatrix
    invariants: EllipticInvariants
    radius: int | None
    rows: list[ProfileRow] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)


def decay_profile(gamma: PadicMatrix, s_max: int, C1: Fraction | None = None) -> OrbitalProfile:
    """Table of raw and D^{1/2}-normalized orbital integrals of 1_{K_s} and 1_{L_s}, s = 0..s_max.

    Flags any failure of: monotonicity of a_s, a_s <= a_{s-1}/p once
    md(gamma) <= s - 2, and (when ``C1`` is given) a_s <= C1 (s+1) p^-s.
    """
    if s_max < 0:
        raise ValueError("s_max must be >= 0")
    inv = invariants(gamma)
    if not inv.elliptic:
        raise NotElliptic("decay profiles need an elliptic element")
    p = gamma.p
    cert = certify(gamma)
    prof = OrbitalProfile(gamma, inv, cert.radius)
    for s in range(s_max + 1):
        raw_K = orbital_Ks(gamma, s)
        raw_L = orbital_TtKs(gamma, 0, s, method="closed")
        prof.rows.append(
            ProfileRow(s, raw_K, raw_L, HalfPower.make(raw_K, -inv.D_valuation, p), HalfPower.make(raw_L, -inv.D_valuation, p))
        )
    for prev, row in zip(prof.rows, prof.rows[1:]):
        if row.a_s.cmp(prev.a_s) > 0:
            prof.flags.append(f"s={row.s}: a_s increased")
        if inv.md <= row.s - 2 and row.a_s.cmp(prev.a_s.scale(Fraction(1, p))) > 0:
            prof.flags.append(f"s={row.s}: a_s > a_(s-1)/p although md <= s-2")
    if C1 is not None:
        for row in prof.rows:
            bound = HalfPower.make(Fraction(C1) * (row.s + 1) / Fraction(p) ** row.s, 0, p)
            if row.a_s.cmp(bound) > 0:
                prof.flags.append(f"s={row.s}: a_s exceeds C1 (s+1) p^-s")
    return prof


def power_saving_constant(prof: OrbitalProfile) -> Fraction:
    """max_s a_s p^s / (s+1), as an exact upper bound on the square root when k = -1."""
    best = Fraction(0)
    p = prof.gamma.p
    for row in prof.rows:
        sq = row.a_s.square() * Fraction(p) ** (2 * row.s) / (row.s + 1) ** 2
        best = max(best, sq)
    return best


def gamma_m(p: int, m: int) -> PadicMatrix:
    """1 + p^m J in the standard unramified torus; md = sd = m and D = p^{-2m}."""
    eps = torus_epsilon(p)
    return PadicMatrix(1, p**m, eps * p**m, 1, p=p)


def unramified_X(p: int, m: int) -> PadicMatrix:
    return PadicMatrix(0, p**m, torus_epsilon(p) * p**m, 0, p=p)


def ramified_X(p: int, m: int) -> PadicMatrix:
    return PadicMatrix(0, p**m, p ** (m + 1), 0, p=p)
