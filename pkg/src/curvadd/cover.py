"""The decision core: can a nonzero additive map f on F_{p^k} satisfy
f(x) * f(y) = 0 at every point (x, y) of a curve?

Two independent deciders answer it:

* decide_by_hyperplanes: a nonzero f works iff its kernel, widened to
  any hyperplane containing it, covers every point in one coordinate.
  So it suffices to test the (p^k - 1)/(p - 1) trace-functional
  hyperplanes.  Membership tests run on exact field elements.
* decide_by_exhaustion: scan every one of the p^(k^2) nonzero
  linearized maps against every point, using integer discrete-log
  tables for the inner products.  Kept deliberately brute-force as an
  oracle for the first decider.

The zero-forcing bound and its conic/elliptic specializations are
evaluated in exact integer arithmetic; square roots never appear, as
both sides are squared after a sign check, so boundary cases are
decided exactly.  analyze() bundles everything and hard-errors if any
applicable forcing bound contradicts the search verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import claims
from .additive import LinearizedMap, hyperplane_functionals
from .caps import field_cap, oracle_cap
from .errors import CapExceeded, ContextMismatch, Inconsistent
from .curve import (
    affine_points,
    axis_parallel_lines,
    hasse_weil_window,
    points_at_infinity_count,
    singular_points,
)
from .fields import is_prime


@dataclass(frozen=True)
class CoverVerdict:
    """Outcome of a search for a nonzero f with f(x)f(y) = 0 on all
    points.  If exists_nonzero, witness_map is such an f and
    witness_subspace is its kernel."""

    exists_nonzero: bool
    witness_map: object = None
    witness_subspace: object = None
    method: str = "hyperplane-search"


@dataclass(frozen=True)
class BoundReport:
    """One forcing bound, with the exact integers behind the verdict.

    forced_zero means: every additive f vanishing multiplicatively on
    the curve must be identically zero.  exact_terms holds the integer
    comparison terms so boundary cases are auditable.
    """

    name: str
    forced_zero: bool
    exact_terms: dict
    m: int = None
    d: int = None
    cover_lower_bound: Fraction = None
    claimed_by_statement: bool = None


def _check_pk(p, k):
    p, k = int(p), int(k)
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return p, k


def zero_forcing_inequality(p, k, d):
    """The main bound: (q + 1 - (d-1)(d-2) sqrt(q) - d) / d > 2 p^(k-1).

    Rearranged to A > B * sqrt(q) with A = q + 1 - d - 2 d p^(k-1) and
    B = (d-1)(d-2), then squared: holds iff A > 0 and A^2 > B^2 * q.
    """
    p, k = _check_pk(p, k)
    d = int(d)
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    q = p**k
    a = q + 1 - d - 2 * d * p ** (k - 1)
    b = (d - 1) * (d - 2)
    forced = a > 0 and a * a > b * b * q
    return BoundReport(
        name="inequality1",
        forced_zero=forced,
        exact_terms={
            "q": q,
            "d": d,
            "A": a,
            "A_squared": a * a,
            "B": b,
            "B_squared_times_q": b * b * q,
        },
        d=d,
    )


def zero_forcing_by_count(m, d, p, k):
    """Count form of the bound: m/d > 2 p^(k-1) with the true affine
    point count m, compared as exact rationals."""
    p, k = _check_pk(p, k)
    m, d = int(m), int(d)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    threshold = 2 * p ** (k - 1)
    forced = Fraction(m, d) > threshold
    return BoundReport(
        name="by_count",
        forced_zero=forced,
        exact_terms={"m": m, "d": d, "two_p_km1_times_d": threshold * d},
        m=m,
        d=d,
        cover_lower_bound=Fraction(m, d),
    )


def conjectural_by_count(m, d, p, k):
    """The conjectured sharper threshold m/d > p^(k-1), with the factor
    2 dropped.  Reported only; never used to force a verdict."""
    p, k = _check_pk(p, k)
    return Fraction(int(m), int(d)) > p ** (k - 1)


def conic_claimed(p, k):
    """The statement-level conic case: p >= 5."""
    return p >= 5


def conic_bound(p, k):
    """Conic specialization (d = 2): forced iff q - 1 > 4 p^(k-1).

    The statement-level claim is p >= 5; at (p=5, k=1) the inequality
    itself fails (4 > 4), so claimed_by_statement and forced_zero can
    disagree there.
    """
    p, k = _check_pk(p, k)
    q = p**k
    lhs = q - 1
    rhs = 4 * p ** (k - 1)
    return BoundReport(
        name="conic",
        forced_zero=lhs > rhs,
        exact_terms={"q_minus_1": lhs, "four_p_km1": rhs},
        d=2,
        claimed_by_statement=conic_claimed(p, k),
    )


def elliptic_claimed(p, k):
    """The statement-level elliptic case split."""
    return p > 13 or (p == 7 and k > 2) or (p in (11, 13) and k > 1)


def elliptic_bound(p, k):
    """Smooth cubic specialization: forced iff
    (p - 6) p^(k-1) > 2 p^(k/2), squared to
    p > 6 and (p - 6)^2 p^(k-1) > 4 p."""
    p, k = _check_pk(p, k)
    lhs = (p - 6) ** 2 * p ** (k - 1)
    rhs = 4 * p
    forced = p > 6 and lhs > rhs
    return BoundReport(
        name="elliptic",
        forced_zero=forced,
        exact_terms={
            "p_minus_6": p - 6,
            "p_minus_6_sq_times_p_km1": lhs,
            "four_p": rhs,
        },
        d=3,
        claimed_by_statement=elliptic_claimed(p, k),
    )


# ---------------------------------------------------------------------------
# Decision procedures.


def _point_pairs(points, ctx):
    pairs = []
    for x, y in points:
        if x.ctx != ctx or y.ctx != ctx:
            raise ContextMismatch("point from a different context")
        pairs.append((x, y))
    return pairs


def _frobenius_orbit(e):
    orbit = [e]
    cur = e
    for _ in range(e.ctx.k - 1):
        cur = cur**e.ctx.p
        orbit.append(cur)
    return tuple(orbit)


def decide_by_hyperplanes(points, ctx, cap=None):
    """Search the hyperplanes for one covering every point.

    A nonzero additive f works iff ker f, and hence some hyperplane
    containing ker f, covers all points in one coordinate; so testing
    hyperplanes alone is complete.  Membership x in ker Tr(a .) is the
    dot product of the Frobenius orbits of a and x.
    """
    pts = _point_pairs(points, ctx)
    orbits = {}

    def orbit(e):
        code = int(e)
        got = orbits.get(code)
        if got is None:
            got = orbits[code] = _frobenius_orbit(e)
        return got

    pairs = [(orbit(x), orbit(y)) for x, y in pts]
    zero = ctx.zero()
    for functional in hyperplane_functionals(ctx, cap):
        avec = functional.coeffs
        covers = True
        for fx, fy in pairs:
            acc = zero
            for a, b in zip(avec, fx):
                acc = acc + a * b
            if acc.is_zero():
                continue
            acc = zero
            for a, b in zip(avec, fy):
                acc = acc + a * b
            if acc.is_zero():
                continue
            covers = False
            break
        if covers:
            return CoverVerdict(
                exists_nonzero=True,
                witness_map=functional,
                witness_subspace=functional.kernel(),
                method="hyperplane-search",
            )
    return CoverVerdict(exists_nonzero=False, method="hyperplane-search")


@lru_cache(maxsize=None)
def _log_tables(ctx):
    """Discrete log/exp tables over element codes, for the scan loop."""
    q = ctx.order
    n = q - 1
    factors = []
    rest = n
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            factors.append(f)
            while rest % f == 0:
                rest //= f
        f += 1
    if rest > 1:
        factors.append(rest)
    one = ctx.one()
    gen = None
    for code in range(2, q):
        el = ctx.decode(code)
        if all(el ** (n // r) != one for r in factors):
            gen = el
            break
    if gen is None:  # q = 3: the only candidate is 2
        gen = ctx.decode(q - 1)
    exp = [0] * (2 * n)
    log = [0] * q
    cur = one
    for i in range(n):
        code = int(cur)
        exp[i] = code
        exp[i + n] = code
        log[code] = i
        cur = cur * gen
    digits = []
    for code in range(q):
        digits.append(tuple(ctx.decode(code).coeffs))
    return exp, log, digits


def decide_by_exhaustion(points, ctx, cap=None):
    """Brute-force oracle: test every nonzero linearized map directly.

    Scans coefficient vectors in the same lexicographic order as
    enumerate_all_maps, so the reported witness is the first working
    map in that order.  Arithmetic runs on integer codes via discrete
    log tables, a code path disjoint from the hyperplane search.
    """
    limit = oracle_cap(cap)
    total = ctx.order**ctx.k
    if total > limit:
        raise CapExceeded("exhaustive map scan", total, limit)
    pts = _point_pairs(points, ctx)
    p, k, q = ctx.p, ctx.k, ctx.order
    exp, log, digits = _log_tables(ctx)

    orbit_codes = {}

    def orbit(e):
        code = int(e)
        got = orbit_codes.get(code)
        if got is None:
            got = orbit_codes[code] = tuple(int(v) for v in _frobenius_orbit(e))
        return got

    pairs = [(orbit(x), orbit(y)) for x, y in pts]
    buf = [0] * k

    def vanishes(avec, xf):
        for j in range(k):
            buf[j] = 0
        for a, b in zip(avec, xf):
            if a and b:
                t = digits[exp[log[a] + log[b]]]
                for j in range(k):
                    buf[j] += t[j]
        for j in range(k):
            if buf[j] % p:
                return False
        return True

    for avec in itertools.product(range(q), repeat=k):
        if not any(avec):
            continue
        ok = True
        for fx, fy in pairs:
            if vanishes(avec, fx):
                continue
            if vanishes(avec, fy):
                continue
            ok = False
            break
        if ok:
            witness = LinearizedMap(ctx, [ctx.decode(a) for a in avec])
            return CoverVerdict(
                exists_nonzero=True,
                witness_map=witness,
                witness_subspace=witness.kernel(),
                method="exhaustive-oracle",
            )
    return CoverVerdict(exists_nonzero=False, method="exhaustive-oracle")


def verify_witness(verdict, points):
    """Post-hoc soundness: the witness is nonzero and vanishes on a
    coordinate of every point."""
    if not verdict.exists_nonzero:
        return True
    f = verdict.witness_map
    if f is None or f.is_zero():
        return False
    for x, y in points:
        if not (f(x).is_zero() or f(y).is_zero()):
            return False
    return True


# ---------------------------------------------------------------------------
# The full pipeline.


@dataclass(frozen=True)
class AnalysisReport:
    """Everything analyze() established about one curve."""

    curve: object
    points: object  # PointSet
    infinity_count: int
    singular: object  # PointSet over the searched extension, or None
    singular_ext_used: int  # 0 when the scan was skipped
    hw: object  # HWWindow
    inequality1: BoundReport
    by_count: BoundReport
    conic: BoundReport
    elliptic: BoundReport
    conjectural_flag: bool
    decision: CoverVerdict
    oracle_verdict: CoverVerdict = None
    oracle_agreement: str = "skipped"  # "agree" | "skipped"
    paper_flags: tuple = ()

    @property
    def forcing_bounds(self):
        """The applicable bounds that report forced_zero."""
        d = self.curve.degree
        fired = []
        if self.inequality1.forced_zero:
            fired.append(self.inequality1)
        if self.by_count.forced_zero:
            fired.append(self.by_count)
        if d == 2 and self.conic.forced_zero:
            fired.append(self.conic)
        if d == 3 and self.elliptic.forced_zero:
            fired.append(self.elliptic)
        return fired


def _feasible_singular_ext(ctx, requested, limit):
    """Largest extension degree <= requested whose pair scan fits the
    cap (0 when even degree 1 does not fit)."""
    best = 0
    for m in range(1, requested + 1):
        if (ctx.order**m) ** 2 <= limit:
            best = m
    return best


def analyze(c, singular_ext=2, oracle="auto", cap=None, ocap=None):
    """Run the whole pipeline on one curve.

    oracle: "auto" runs the exhaustive scan when p^(k^2) fits the
    oracle cap, "on" demands it, "off" skips it.  Raises Inconsistent
    when an applicable forcing bound contradicts the search verdict or
    the two deciders disagree; the message carries every hypothesis
    problem detected (singular points, window violation, axis lines),
    since a violated hypothesis is the usual cause.
    """
    if oracle not in ("auto", "on", "off"):
        raise ValueError(f"oracle must be auto|on|off, got {oracle!r}")
    ctx = c.ctx
    p, k, d = ctx.p, ctx.k, c.degree
    limit = field_cap(cap)

    points = affine_points(c, cap=limit)
    inf_count = points_at_infinity_count(c, cap=limit)
    hw = hasse_weil_window(
        c, cap=limit, affine_count=points.count, infinity_count=inf_count
    )

    requested_ext = int(singular_ext)
    if requested_ext < 0:
        raise ValueError(f"singular_ext must be >= 0, got {requested_ext}")
    ext_used = _feasible_singular_ext(ctx, requested_ext, limit)
    singular = singular_points(c, ext_used, cap=limit) if ext_used else None

    ineq1 = zero_forcing_inequality(p, k, d)
    by_count = zero_forcing_by_count(points.count, d, p, k)
    conic = conic_bound(p, k)
    elliptic = elliptic_bound(p, k)
    conjectural = conjectural_by_count(points.count, d, p, k)

    decision = decide_by_hyperplanes(points, ctx, cap=limit)

    oracle_verdict = None
    agreement = "skipped"
    if oracle != "off":
        total = ctx.order**ctx.k
        if oracle == "on" or total <= oracle_cap(ocap):
            oracle_verdict = decide_by_exhaustion(points, ctx, cap=ocap)
            agreement = "agree"

    notes = []
    if singular is not None and singular.count:
        shown = ", ".join(f"({x!r}, {y!r})" for x, y in list(singular)[:4])
        notes.append(
            f"singular point(s) over F_{p}^{ctx.k * ext_used}: {shown}"
        )
    if hw.verdict == "violates-window":
        notes.append(
            f"point count N = {hw.n_points} falls outside the window "
            f"[{hw.lower}, {hw.upper}]; the curve cannot be smooth and "
            "absolutely irreducible"
        )
    lines = axis_parallel_lines(c, cap=limit)
    if lines:
        notes.append(
            "axis-parallel line component(s) on the curve: "
            + ", ".join(lines)
            + "; the per-line point bound behind the counting argument fails"
        )

    if oracle_verdict is not None and (
        oracle_verdict.exists_nonzero != decision.exists_nonzero
    ):
        raise Inconsistent(
            "INCONSISTENT: hyperplane search says exists_nonzero="
            f"{decision.exists_nonzero} but the exhaustive oracle says "
            f"{oracle_verdict.exists_nonzero} for {c!r}; this is a bug"
        )

    for verdict in (decision, oracle_verdict):
        if verdict is not None and not verify_witness(verdict, points):
            raise Inconsistent(
                f"INCONSISTENT: {verdict.method} returned a witness that "
                f"fails re-verification on {c!r}; this is a bug"
            )

    flags = list(claims.claim_flags(c, points, decision, singular=singular))
    for bound in (conic, elliptic):
        applies = (d == 2 and bound.name == "conic") or (
            d == 3 and bound.name == "elliptic"
        )
        if applies and bound.claimed_by_statement and not bound.forced_zero:
            flags.append(
                f"{bound.name} case (p={p}, k={k}): "
                "claimed by paper, not certified by its inequality"
            )
    flags.extend("hypothesis note: " + n for n in notes)

    report = AnalysisReport(
        curve=c,
        points=points,
        infinity_count=inf_count,
        singular=singular,
        singular_ext_used=ext_used,
        hw=hw,
        inequality1=ineq1,
        by_count=by_count,
        conic=conic,
        elliptic=elliptic,
        conjectural_flag=conjectural,
        decision=decision,
        oracle_verdict=oracle_verdict,
        oracle_agreement=agreement,
        paper_flags=tuple(flags),
    )

    if report.forcing_bounds and decision.exists_nonzero:
        fired = ", ".join(b.name for b in report.forcing_bounds)
        detail = "; ".join(notes) if notes else "no hypothesis problem detected"
        raise Inconsistent(
            f"INCONSISTENT: bound(s) [{fired}] force every f to be zero, "
            f"yet a nonzero witness exists for {c!r} "
            f"(witness {report.decision.witness_map!r}). "
            f"Hypothesis check: {detail}."
        )

    return report
