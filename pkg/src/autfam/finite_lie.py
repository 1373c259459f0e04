"""Brute-force check of the non-degeneracy lemma for sl_2 and sl_3 over F_q.

For a proper twisted Levi subalgebra m of g = sl_n(F_q) and a noncentral
X in m, the sum m + g_X should be a proper subspace of g.  Twisted Levi
subalgebras are realized as centralizers g_S of noncentral semisimple
S in gl_n(F_q); those containing X are the g_S with S in the centralizer of X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from . import arith

SL3_SAMPLES = 10_000
SEED = 20240607
SL3_EXHAUSTIVE_LIMIT = 10_000


class HypothesisViolation(ValueError):
    """X (or delta) is central, or does not lie in the chosen Levi."""


def _check(n: int, q: int) -> None:
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    if not arith.is_prime(q) or q > 7:
        raise ValueError("q must be a prime <= 7")


# --------------------------------------------------------------------------- linear algebra mod q


def rref(A: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    # plain Python ints: the matrices are at most 10 x 9 and numpy call overhead dominates
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1] if A.ndim == 2 else 0
    M = [[int(v) % q for v in row] for row in A.tolist()]
    pivots = []
    r = 0
    for c in range(cols):
        i = next((i for i in range(r, len(M)) if M[i][c]), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = pow(M[r][c], -1, q)
        pr = [v * inv % q for v in M[r]]
        M[r] = pr
        for j in range(len(M)):
            f = M[j][c]
            if j != r and f:
                M[j] = [(a - f * b) % q for a, b in zip(M[j], pr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return np.array(M[:r], dtype=np.int64).reshape(r, cols), pivots


def rank(A: np.ndarray, q: int) -> int:
    if len(A) == 0:
        return 0
    return len(rref(A, q)[1])


def nullspace(A: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0 mod q}."""
    cols = A.shape[1]
    R, piv = rref(A, q)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        x = np.zeros(cols, dtype=np.int64)
        x[f] = 1
        for i, pc in enumerate(piv):
            x[pc] = -R[i, f] % q
        basis.append(x)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def _commutator_map(S: np.ndarray, q: int) -> np.ndarray:
    """Matrix of Y -> SY - YS on gl_n in the row-major basis E_ij."""
    n = S.shape[0]
    I = np.eye(n, dtype=np.int64)
    return (np.kron(S, I) - np.kron(I, S.T)) % q


def _trace_row(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64).reshape(1, n * n)


def centralizer_gl(S: np.ndarray, q: int) -> np.ndarray:
    return nullspace(_commutator_map(S, q), q)


def centralizer_sl(S: np.ndarray, q: int) -> np.ndarray:
    n = S.shape[0]
    return nullspace(np.vstack([_commutator_map(S, q), _trace_row(n)]), q)


def sl_dim(n: int, q: int) -> int:
    return n * n - 1


def is_central(X: np.ndarray, q: int) -> bool:
    X = np.asarray(X) % q
    n = X.shape[0]
    return bool(np.all(X == (X[0, 0] * np.eye(n, dtype=np.int64)) % q))


# --------------------------------------------------------------------------- semisimplicity


@lru_cache(maxsize=None)
def _radical(charpoly: tuple[int, ...], q: int) -> tuple[int, ...]:
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(charpoly), x, modulus=q)
    _, factors = poly.factor_list()
    rad = sympy.Poly(1, x, modulus=q)
    for f, _ in factors:
        rad = rad * f
    return tuple(int(c) % q for c in rad.all_coeffs())


def _charpoly(S: np.ndarray, q: int) -> tuple[int, ...]:
    """Coefficients of det(x - S) mod q, leading first (n = 2 or 3)."""
    a = [[int(v) for v in row] for row in S]
    n = len(a)
    tr = sum(a[i][i] for i in range(n))
    if n == 2:
        return (1, -tr % q, (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % q)
    minors = sum(a[i][i] * a[j][j] - a[i][j] * a[j][i] for i in range(3) for j in range(i + 1, 3))
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return (1, -tr % q, minors % q, -det % q)


def _poly_at(coeffs: tuple[int, ...], S: np.ndarray, q: int) -> np.ndarray:
    n = S.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in coeffs:
        out = (out @ S + c * np.eye(n, dtype=np.int64)) % q
    return out


def is_semisimple(S: np.ndarray, q: int) -> bool:
    """S is diagonalizable over the algebraic closure iff rad(charpoly)(S) = 0."""
    S = np.asarray(S, dtype=np.int64) % q
    return _semisimple_cached(S.tobytes(), S.shape[0], q)


@lru_cache(maxsize=None)
def _semisimple_cached(key: bytes, n: int, q: int) -> bool:
    S = np.frombuffer(key, dtype=np.int64).reshape(n, n)
    return not np.any(_poly_at(_radical(_charpoly(S, q), q), S, q))


# --------------------------------------------------------------------------- the lemma


def _as_matrix(v: np.ndarray, n: int) -> np.ndarray:
    return np.asarray(v, dtype=np.int64).reshape(n, n)


def levi_from_spec(levi, n: int, q: int) -> np.ndarray:
    """The semisimple S defining a named Levi: "torus", "block:2,1", or an explicit matrix."""
    if isinstance(levi, str):
        if levi == "torus":
            if n > q:
                raise ValueError("F_q has too few elements for a regular diagonal element")
            return np.diag(np.arange(n, dtype=np.int64)) % q
        if levi.startswith("block:"):
            sizes = [int(t) for t in levi[6:].split(",")]
            if sum(sizes) != n or len(sizes) < 2:
                raise ValueError(f"bad block sizes {sizes} for n = {n}")
            entries = [i for i, k in enumerate(sizes) for _ in range(k)]
            return np.diag(np.array(entries, dtype=np.int64)) % q
        raise ValueError(f"unknown levi spec {levi!r}")
    return np.asarray(levi, dtype=np.int64) % q


def _proper_sum(m_basis: np.ndarray, c_basis: np.ndarray, n: int, q: int) -> bool:
    return rank(np.vstack([m_basis, c_basis]), q) < sl_dim(n, q)


def orth_check_lie(n: int, q: int, X, levi) -> bool:
    """True iff m + g_X is a proper subspace of sl_n(F_q)."""
    _check(n, q)
    X = np.asarray(X, dtype=np.int64) % q
    if is_central(X, q):
        raise HypothesisViolation("X is central")
    S = levi_from_spec(levi, n, q)
    _check_levi(S, q)
    if np.any(_commutator_map(S, q) @ X.ravel() % q):
        raise HypothesisViolation("X does not lie in the Levi subalgebra")
    return _proper_sum(centralizer_sl(S, q), centralizer_sl(X, q), n, q)


def orth_check_group(n: int, q: int, delta, levi) -> bool:
    """True iff m + g_delta is proper, g_delta the Ad(delta)-fixed subspace."""
    _check(n, q)
    delta = np.asarray(delta, dtype=np.int64) % q
    if int(sympy.Matrix(delta.tolist()).det()) % q == 0:
        raise ValueError("delta is not invertible")
    if is_central(delta, q):
        raise HypothesisViolation("delta is central")
    S = levi_from_spec(levi, n, q)
    _check_levi(S, q)
    if np.any((S @ delta - delta @ S) % q):
        raise HypothesisViolation("delta does not lie in the Levi subgroup")
    # Ad(delta) Y = Y  <=>  delta Y - Y delta = 0
    return _proper_sum(centralizer_sl(S, q), centralizer_sl(delta, q), n, q)


def _check_levi(S: np.ndarray, q: int) -> None:
    if is_central(S, q):
        raise HypothesisViolation("the Levi must be proper (S noncentral)")
    if not is_semisimple(S, q):
        raise HypothesisViolation("the Levi must be the centralizer of a semisimple element")


def levis_containing(X: np.ndarray, q: int) -> list[np.ndarray]:
    """Distinct proper twisted Levi subalgebras g_S (as sl_n bases) with [S, X] = 0.

    S runs over the gl_n-centralizer of X modulo scalars and up to scaling,
    which does not change g_S.
    """
    n = X.shape[0]
    C = centralizer_gl(X, q)
    ident = np.eye(n, dtype=np.int64).ravel()
    comp = _complement_of_identity(C, ident, q)
    seen = set()
    out = []
    for coeffs in _projective_points(len(comp), q):
        S = _as_matrix(np.asarray(coeffs, dtype=np.int64) @ comp % q, n)
        if is_central(S, q) or not is_semisimple(S, q):
            continue
        M = centralizer_sl(S, q)
        key = rref(M, q)[0].tobytes()
        if key in seen:
            continue
        seen.add(key)
        out.append(M)
    return out


def _complement_of_identity(C: np.ndarray, ident: np.ndarray, q: int) -> np.ndarray:
    """Rows spanning a complement of F_q * I inside span(C)."""
    basis = [ident % q]
    out = []
    for row in C:
        if rank(np.vstack(basis + [row]), q) > len(basis):
            basis.append(row % q)
            out.append(row % q)
    return np.array(out, dtype=np.int64).reshape(len(out), C.shape[1])


def _projective_points(r: int, q: int):
    """One representative of each line in F_q^r (first nonzero coordinate 1)."""
    for lead in range(r):
        for tail in itertools.product(range(q), repeat=r - lead - 1):
            yield (0,) * lead + (1,) + tail


@dataclass(frozen=True)
class SweepResult:
    n: int
    q: int
    elements: int
    pairs: int
    counterexamples: int
    kind: str


def _check_element(X: np.ndarray, q: int) -> tuple[int, int]:
    X = np.asarray(X, dtype=np.int64) % q
    return _check_element_cached(X.tobytes(), X.shape[0], q)


@lru_cache(maxsize=None)
def _check_element_cached(key: bytes, n: int, q: int) -> tuple[int, int]:
    X = np.frombuffer(key, dtype=np.int64).reshape(n, n)
    CX = centralizer_sl(X, q)
    pairs = bad = 0
    for M in levis_containing(X, q):
        pairs += 1
        if not _proper_sum(M, CX, n, q):
            bad += 1
    return pairs, bad


def sl2_elements(q: int):
    for a, b, c in itertools.product(range(q), repeat=3):
        X = np.array([[a, b], [c, -a % q]], dtype=np.int64)
        if not is_central(X, q):
            yield X


def sl3_representatives(q: int):
    """Companion matrices of every trace-zero monic cubic, plus the diagonal non-regular classes."""
    for c1, c0 in itertools.product(range(q), repeat=2):
        # x^3 + 0 x^2 + c1 x + c0
        yield np.array([[0, 0, -c0 % q], [1, 0, -c1 % q], [0, 1, 0]], dtype=np.int64)
    for a in range(1, q):
        X = np.diag([a, a, -2 * a % q]).astype(np.int64) % q
        if not is_central(X, q):
            yield X


def sl3_random(q: int, count: int = SL3_SAMPLES, seed: int = SEED):
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        X = rng.integers(0, q, size=(3, 3), dtype=np.int64)
        X[2, 2] = -(X[0, 0] + X[1, 1]) % q
        if is_central(X, q):
            continue
        produced += 1
        yield X


def sl3_elements(q: int):
    if q**8 > SL3_EXHAUSTIVE_LIMIT:
        raise ValueError(f"sl3(F_{q}) has {q ** 8} elements, above the exhaustive limit {SL3_EXHAUSTIVE_LIMIT}")
    for e in itertools.product(range(q), repeat=8):
        X = np.array(e + (0,), dtype=np.int64).reshape(3, 3)
        X[2, 2] = -(X[0, 0] + X[1, 1]) % q
        if not is_central(X, q):
            yield X


def sweep_lie(n: int, q: int, samples: int = SL3_SAMPLES, seed: int = SEED, exhaustive: bool = False) -> SweepResult:
    _check(n, q)
    if n == 2:
        elems, kind = list(sl2_elements(q)), "exhaustive"
    elif exhaustive:
        elems, kind = list(sl3_elements(q)), "exhaustive"
    else:
        elems = [X for X in sl3_representatives(q) if not is_central(X, q)] + list(sl3_random(q, samples, seed))
        kind = "stratified"
    pairs = bad = 0
    for X in elems:
        a, b = _check_element(X, q)
        pairs += a
        bad += b
    return SweepResult(n, q, len(elems), pairs, bad, kind)


def pgl2_semisimple_noncentral(q: int):
    """Representatives in GL2(F_q) of the noncentral semisimple classes of PGL2(F_q) elements."""
    seen = set()
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q == 0:
            continue
        delta = np.array([[a, b], [c, d]], dtype=np.int64)
        if is_central(delta, q) or not is_semisimple(delta, q):
            continue
        key = min(tuple((delta.ravel() * t) % q) for t in range(1, q))
        if key in seen:
            continue
        seen.add(key)
        yield delta


def sweep_group(q: int) -> SweepResult:
    _check(2, q)
    elems = list(pgl2_semisimple_noncentral(q))
    pairs = bad = 0
    for delta in elems:
        a, b = _check_element(delta, q)
        pairs += a
        bad += b
    return SweepResult(2, q, len(elems), pairs, bad, "exhaustive-group")
