"""Irreducible representations of PGL(2, Q_q) of conductor exponent <= 3.

Only numerical invariants are stored: conductor, how many members a kind
has, formal degree and depth.  Haar measure on PGL(2, Q_q) is normalized by
vol(PGL(2, Z_q)) = 1 throughout.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import arith

DIM_G = 3  # dim PGL(2) = dim SL(2)


class Kind(str, enum.Enum):
    UNRAMIFIED_PRINCIPAL_SERIES = "UnramifiedPrincipalSeries"
    STEINBERG = "Steinberg"
    STEINBERG_UNRAMIFIED_TWIST = "SteinbergUnramifiedTwist"
    DEPTH_ZERO_SUPERCUSPIDAL = "DepthZeroSupercuspidal"
    SIMPLE_SUPERCUSPIDAL = "SimpleSupercuspidal"


class UnsupportedPrime(ValueError):
    pass


class NoFormalDegree(ValueError):
    pass


CONDUCTOR = {
    Kind.UNRAMIFIED_PRINCIPAL_SERIES: 0,
    Kind.STEINBERG: 1,
    Kind.STEINBERG_UNRAMIFIED_TWIST: 1,
    Kind.DEPTH_ZERO_SUPERCUSPIDAL: 2,
    Kind.SIMPLE_SUPERCUSPIDAL: 3,
}

DEPTH = {
    Kind.UNRAMIFIED_PRINCIPAL_SERIES: Fraction(0),
    Kind.STEINBERG: Fraction(0),
    Kind.STEINBERG_UNRAMIFIED_TWIST: Fraction(0),
    Kind.DEPTH_ZERO_SUPERCUSPIDAL: Fraction(0),
    Kind.SIMPLE_SUPERCUSPIDAL: Fraction(1, 2),
}


def _check_q(q: int) -> None:
    if not arith.is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q < 5:
        raise UnsupportedPrime(f"residue characteristic {q} is not supported (need q >= 5)")


def pgl2_order(q: int) -> int:
    """|PGL(2, F_q)|."""
    return q * (q * q - 1)


@dataclass(frozen=True)
class LocalRepDescriptor:
    kind: Kind
    q: int
    conductor: int
    depth: Fraction
    count: int | None  # None for the continuous unramified family
    pairs: int | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["depth"] = str(self.depth)
        try:
            d["formal_degree"] = str(formal_degree(self))
        except NoFormalDegree:
            d["formal_degree"] = None
        return d


def descriptor(kind: Kind, q: int) -> LocalRepDescriptor:
    _check_q(q)
    kind = Kind(kind)
    count = {
        Kind.UNRAMIFIED_PRINCIPAL_SERIES: None,
        Kind.STEINBERG: 1,
        Kind.STEINBERG_UNRAMIFIED_TWIST: 1,
        # cuspidal reps of PGL(2, F_q): characters of F_{q^2}^x / F_q^x in general
        # position, up to Frobenius
        Kind.DEPTH_ZERO_SUPERCUSPIDAL: (q - 1) // 2,
        Kind.SIMPLE_SUPERCUSPIDAL: 2 * (q - 1),
    }[kind]
    pairs = q - 1 if kind is Kind.SIMPLE_SUPERCUSPIDAL else None
    return LocalRepDescriptor(kind, q, CONDUCTOR[kind], DEPTH[kind], count, pairs)


def enumerate_types(q: int) -> list[LocalRepDescriptor]:
    _check_q(q)
    return [descriptor(k, q) for k in Kind]


def steinberg_type_count(q: int) -> int:
    return sum(d.count for d in enumerate_types(q) if d.conductor == 1)


def ep_factor(q: int) -> Fraction:
    """Scalar c with mu_EP = c * mu, where mu gives PGL(2, Z_q) volume one.

    c = (1 - q)/2, so Steinberg has formal degree of absolute value 1.
    """
    return Fraction(1 - q, 2)


def formal_degree(d: LocalRepDescriptor, measure: str = "K") -> Fraction:
    """Formal degree with respect to vol(PGL(2, Z_q)) = 1 (``measure="K"``) or Euler-Poincare."""
    q = d.q
    if d.kind is Kind.UNRAMIFIED_PRINCIPAL_SERIES:
        raise NoFormalDegree("unramified principal series are not square-integrable")
    if d.kind in (Kind.STEINBERG, Kind.STEINBERG_UNRAMIFIED_TWIST):
        deg = Fraction(q - 1, 2)
    elif d.kind is Kind.DEPTH_ZERO_SUPERCUSPIDAL:
        deg = formal_degree_from_datum(depth_zero_datum(q))
    else:
        deg = formal_degree_from_datum(simple_sc_datum(q))
    if measure == "K":
        return deg
    if measure == "EP":
        return deg / abs(ep_factor(q))
    raise ValueError(f"unknown measure {measure!r}")


@dataclass(frozen=True)
class MoyPrasadSpec:
    group: str  # "SL2" or "PGL2"
    point: str  # "vertex" or "barycenter"

    def __post_init__(self):
        if self.group not in ("SL2", "PGL2"):
            raise ValueError(f"unknown group {self.group!r}")
        if self.point not in ("vertex", "barycenter"):
            raise ValueError(f"unknown point {self.point!r}")

    def check_depth(self, r) -> Fraction:
        r = Fraction(r)
        step = 1 if self.point == "vertex" else Fraction(1, 2)
        if r < 0 or (r / step).denominator != 1:
            raise ValueError(f"depth {r} is not a jump of the {self.point} filtration")
        return r


def _step_index(spec: MoyPrasadSpec, q: int, r: Fraction) -> int:
    """[G_{x,r} : G_{x,r+step}] for one filtration step starting at r."""
    if spec.point == "vertex":
        # reductive quotient at r = 0; SL2(F_q) and PGL2(F_q) have the same order
        return pgl2_order(q) if r == 0 else q**DIM_G
    # barycenter of an edge: Iwahori filtration, reductive quotient a split torus
    if r == 0:
        return q - 1
    # half-integral steps move both root spaces, integral steps the torus
    return q**2 if (2 * r) % 2 == 1 else q


def moy_prasad_index(spec: MoyPrasadSpec, q: int, r, r2) -> int:
    """[G_{x,r} : G_{x,r2}] for r <= r2 (both filtration jumps at x)."""
    r, r2 = spec.check_depth(r), spec.check_depth(r2)
    if r > r2:
        raise ValueError("need r <= r2")
    step = 1 if spec.point == "vertex" else Fraction(1, 2)
    out = 1
    cur = r
    while cur < r2:
        out *= _step_index(spec, q, cur)
        cur += step
    return out


def mp_volume(spec: MoyPrasadSpec, q: int, r) -> Fraction:
    """vol(G_{x,r}) with vol(G_{x0,0}) = 1 at a hyperspecial vertex x0."""
    r = spec.check_depth(r)
    if spec.point == "vertex":
        return Fraction(1, moy_prasad_index(spec, q, 0, r))
    # the Iwahori has index q + 1 in K
    return Fraction(1, (q + 1) * moy_prasad_index(spec, q, 0, r))


@dataclass(frozen=True)
class CompactInductionDatum:
    dim_rho: int
    vol_J_mod_center: Fraction
    s_Sigma: Fraction
    q: int

    def __post_init__(self):
        if self.dim_rho < 1:
            raise ValueError("dim_rho must be positive")
        if self.vol_J_mod_center <= 0:
            raise ValueError("vol(J/Z) must be positive")
        if self.dim_rho > self.q**DIM_G:
            raise ValueError(f"dim_rho = {self.dim_rho} exceeds q^dim G = {self.q ** DIM_G}")


def formal_degree_from_datum(d: CompactInductionDatum) -> Fraction:
    """deg(c-Ind_J^G rho) = dim rho / vol(J/Z)."""
    return d.dim_rho / Fraction(d.vol_J_mod_center)


def degree_upper_bound(q: int, depth, point: str = "vertex") -> Fraction:
    """q^{dim G} / vol(G_{x,s}) for s the filtration jump at or just below ``depth``."""
    spec = MoyPrasadSpec("PGL2", point)
    step = 1 if point == "vertex" else Fraction(1, 2)
    s = (Fraction(depth) // step) * step
    return Fraction(q**DIM_G) / mp_volume(spec, q, s)


def simple_sc_datum(q: int) -> CompactInductionDatum:
    """Z * I^+ * <Pi> with a one-dimensional affine generic character.

    vol(I^+) = 1 / ([K:I] [I:I^+]) = 1 / ((q+1)(q-1)); the element Pi (square
    central) doubles it modulo the center.
    """
    return CompactInductionDatum(1, Fraction(2, (q + 1) * (q - 1)), Fraction(1, 2), q)


def depth_zero_datum(q: int) -> CompactInductionDatum:
    """Inflation of a cuspidal representation of PGL(2, F_q) to K."""
    return CompactInductionDatum(q - 1, Fraction(1), Fraction(0), q)


def datum_for(d: LocalRepDescriptor) -> CompactInductionDatum:
    if d.kind is Kind.SIMPLE_SUPERCUSPIDAL:
        return simple_sc_datum(d.q)
    if d.kind is Kind.DEPTH_ZERO_SUPERCUSPIDAL:
        return depth_zero_datum(d.q)
    raise ValueError(f"{d.kind.value} is not compactly induced from a compact open subgroup")
