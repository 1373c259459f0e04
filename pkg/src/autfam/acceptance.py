"""Acceptance criteria as plain functions.

Each criterion returns a CriterionResult: a pass flag, a one-line detail and
a set of CSV artifacts (name -> rows).  Nothing here reads the clock or any
other nondeterministic source, so artifacts are byte-stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import bruhat_tits as bt
from . import finite_lie
from .eichler_selberg import dim_new
from .families import count_sc_aggregate, count_sc_pair, equidist_report
from .local_reps import formal_degree_from_datum, simple_sc_datum
from .plancherel import inversion_defect

SC_WEIGHTS = range(2, 21, 2)
SC_PRIMES = (5, 7, 11, 13)
ST_WEIGHTS = range(2, 41, 2)
ST_BOUND = Fraction(5, 2)
EQ_LEVEL = 125
EQ_WEIGHTS = (2, 4, 12, 20)
EQ_NMAX = 500
STABILITY = 2
PL_PRIMES = (2, 3, 5, 101)
PL_MMAX = 6
PL_TOL = 1e-10
ORB_PRIMES = (3, 5, 7)
ORB_DEPTHS = (1, 2, 3)
SL2_PRIMES = (3, 5, 7)
GROUP_PRIMES = (3, 5)
SL3_PRIMES = (3, 5)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    artifacts: dict[str, list[list]] = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number:2d} {self.name}: {self.detail}"


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bt.HalfPower):
        return x.render()
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def primes_upto(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if all(q % d for d in range(2, math.isqrt(q) + 1))]


# --------------------------------------------------------------------------- 1-4: counts


def criterion_1() -> CriterionResult:
    rows = [["k", "q", "dim_new", "closed_form"]]
    bad = []
    for q in SC_PRIMES:
        for k in SC_WEIGHTS:
            d = dim_new(k, q**3)
            f = Fraction((k - 1) * (q + 1) * (q - 1) ** 2, 12)
            rows.append([k, q, d, f])
            if d != f:
                bad.append((k, q))
    return CriterionResult(1, "supercuspidal dimension law", not bad, f"{len(rows) - 1} cells, mismatches {bad}", {"c01_sc_dims.csv": rows})


def criterion_2() -> CriterionResult:
    rows = [["k", "q", "dim_new", "pair", "q_minus_1_times_pair"]]
    bad = []
    for q in SC_PRIMES:
        for k in SC_WEIGHTS:
            d = dim_new(k, q**3)
            pair = count_sc_pair(k, q)
            rows.append([k, q, d, pair, (q - 1) * pair])
            try:
                count_sc_aggregate(k, q)
            except AssertionError:
                bad.append((k, q))
                continue
            if d != (q - 1) * pair:
                bad.append((k, q))
    return CriterionResult(2, "pair identity", not bad, f"{len(rows) - 1} cells, mismatches {bad}", {"c02_pairs.csv": rows})


def criterion_3() -> CriterionResult:
    rows = [["q", "formal_degree", "expected"]]
    bad = []
    for q in SC_PRIMES:
        deg = formal_degree_from_datum(simple_sc_datum(q))
        exp = Fraction(q * q - 1, 2)
        rows.append([q, deg, exp])
        if deg != exp:
            bad.append(q)
    return CriterionResult(3, "simple supercuspidal formal degree", not bad, f"q in {SC_PRIMES}, mismatches {bad}", {"c03_formal_degree.csv": rows})


def criterion_4() -> CriterionResult:
    rows = [["k", "q", "dim_new", "main", "deviation"]]
    worst = (Fraction(0), None)
    for q in primes_upto(199):
        for k in ST_WEIGHTS:
            d = dim_new(k, q)
            main = Fraction((k - 1) * (q - 1), 12)
            dev = d - main
            rows.append([k, q, d, main, dev])
            if abs(dev) > worst[0]:
                worst = (abs(dev), (k, q))
    ok = worst[0] <= ST_BOUND
    return CriterionResult(
        4,
        "Steinberg main term",
        ok,
        f"max |dev| = {fmt(worst[0])} at (k, q) = {worst[1]}, bound {fmt(ST_BOUND)}",
        {"c04_steinberg.csv": rows},
    )


# --------------------------------------------------------------------------- 5: equidistribution


def criterion_5() -> CriterionResult:
    """C0(k) = max_n |S(n) - m delta|/n per weight; the single constant is their max.

    It is valid for every k by construction, so the content of the check is the
    stability requirement max_k C0(k) <= 2 min_k C0(k).
    """
    rows = [["k", "m", "C0_k", "C0_k_float", "nonsquare_mean"]]
    consts = {}
    for k in EQ_WEIGHTS:
        rep = equidist_report(k, EQ_LEVEL, EQ_NMAX)
        consts[k] = rep.C0
        rows.append([k, rep.m, rep.C0, float(rep.C0), rep.nonsquare_mean()])
    C0 = max(consts.values())
    lo = min(consts.values())
    ratio = C0 / lo if lo else None
    ok = lo > 0 and C0 <= STABILITY * lo
    detail = (
        "C0(k) = " + ", ".join(f"{k}:{float(v):.4f}" for k, v in consts.items())
        + f"; C0 = {float(C0):.4f}; max/min = {float(ratio) if ratio else 'inf':.4f} (needs <= {STABILITY})"
    )
    return CriterionResult(5, "Sato-Tate residual constant stability", ok, detail, {"c05_equidist.csv": rows})


# --------------------------------------------------------------------------- 6: Plancherel


def criterion_6() -> CriterionResult:
    rows = [["p", "m", "defect"]]
    worst = 0.0
    for p in PL_PRIMES:
        for m in range(PL_MMAX + 1):
            d = inversion_defect(m, p)
            rows.append([p, m, f"{d:.3e}"])
            worst = max(worst, d)
    return CriterionResult(6, "Plancherel inversion", worst < PL_TOL, f"max defect {worst:.3e} < {PL_TOL:.0e}", {"c06_plancherel.csv": rows})


# --------------------------------------------------------------------------- 7: orbital decay


def criterion_7() -> CriterionResult:
    rows = [["p", "m", "s", "raw_K", "raw_L", "a_K", "a_s"]]
    const_rows = [["p", "m", "c_gamma_squared"]]
    fails = []
    spreads = {}
    for p in ORB_PRIMES:
        per_m, profiles = {}, {}
        for m in ORB_DEPTHS:
            g = bt.gamma_m(p, m)
            inv = bt.invariants(g)
            prof = profiles[m] = bt.decay_profile(g, m + 3)
            for r in prof.rows:
                rows.append([p, m, r.s, r.raw_K, r.raw_L, r.a_K, r.a_s])
            a = [r.a_s for r in prof.rows]
            for s in range(1, len(a)):
                if a[s].cmp(a[s - 1]) > 0:
                    fails.append(f"(a) p={p} m={m} s={s}")
                if s >= m + 2 and a[s].cmp(a[s - 1].scale(Fraction(1, p))) > 0:
                    fails.append(f"(b) p={p} m={m} s={s}")
            sd = int(inv.sd)
            for s in (sd + 1, sd + 2):
                if bt.orbital_Ks(g, s) != 0:
                    fails.append(f"(d) p={p} m={m} s={s}")
            per_m[m] = bt.power_saving_constant(prof)
            const_rows.append([p, m, per_m[m]])
        # C1 = max over gamma; uniformity means no gamma needs more than twice another's
        hi, lo = max(per_m.values()), min(per_m.values())
        spreads[p] = math.sqrt(hi / lo)
        if hi > STABILITY**2 * lo:
            fails.append(f"(c) p={p} spread {spreads[p]:.3f}")
        C1_sq = hi
        for m, prof in profiles.items():
            for r in prof.rows:
                bound_sq = C1_sq * (r.s + 1) ** 2 / Fraction(p) ** (2 * r.s)
                if r.a_s.square() > bound_sq:
                    fails.append(f"(c) p={p} m={m} s={r.s} exceeds C1")
    detail = "C1 spread per p: " + ", ".join(f"{p}:{v:.3f}" for p, v in spreads.items()) + f"; failures {fails}"
    return CriterionResult(7, "orbital decay suite", not fails, detail, {"c07_profiles.csv": rows, "c07_constants.csv": const_rows})


# --------------------------------------------------------------------------- 8: descent


def descent_grid():
    for p in ORB_PRIMES:
        for m in ORB_DEPTHS:
            for label, X in (("unramified", bt.unramified_X(p, m)), ("ramified", bt.ramified_X(p, m))):
                for group in ("SL2", "PGL2"):
                    for s in range(1, m + 3):
                        yield p, m, label, group, s, X


def criterion_8() -> CriterionResult:
    rows = [["p", "depth", "torus", "group", "s", "group_side", "lie_side"]]
    bad = []
    for p, m, label, group, s, X in descent_grid():
        res = bt.descent_check(bt.cayley(X, group), s)
        rows.append([p, m, label, group, s, res.group_side, res.lie_side])
        if not res.ok:
            bad.append((p, m, label, group, s))
    return CriterionResult(8, "Lie descent", not bad, f"{len(rows) - 1} cells, mismatches {bad}", {"c08_descent.csv": rows})


# --------------------------------------------------------------------------- 9: finite lemma


def criterion_9() -> CriterionResult:
    rows = [["n", "q", "kind", "elements", "pairs", "counterexamples"]]
    results = [finite_lie.sweep_lie(2, q) for q in SL2_PRIMES]
    results += [finite_lie.sweep_group(q) for q in GROUP_PRIMES]
    results += [finite_lie.sweep_lie(3, q) for q in SL3_PRIMES]
    for r in results:
        rows.append([r.n, r.q, r.kind, r.elements, r.pairs, r.counterexamples])
    total = sum(r.counterexamples for r in results)
    return CriterionResult(
        9,
        "finite non-degeneracy lemma",
        total == 0,
        f"{sum(r.pairs for r in results)} (Levi, element) pairs, {total} counterexamples",
        {"c09_finite_lie.csv": rows},
    )


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def run_criterion(number: int) -> CriterionResult:
    return CRITERIA[number]()
