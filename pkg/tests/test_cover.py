"""Zero-forcing bounds, the two deciders, and the combined analysis."""

import itertools
from fractions import Fraction

import pytest

from curvadd import (
    ContextMismatch,
    FqContext,
    Inconsistent,
    analyze,
    conic_bound,
    conic_claimed,
    conjectural_by_count,
    decide_by_exhaustion,
    decide_by_hyperplanes,
    elliptic_bound,
    elliptic_claimed,
    parse_curve_file,
    verify_witness,
    zero_forcing_by_count,
    zero_forcing_inequality,
)
from curvadd.caps import field_cap, oracle_cap

from conftest import build_curve, random_point_set


def test_inequality_exact_values():
    b = zero_forcing_inequality(7, 1, 2)
    assert b.forced_zero
    assert b.exact_terms == {
        "q": 7, "d": 2, "A": 2, "A_squared": 4, "B": 0,
        "B_squared_times_q": 0,
    }
    # d = 3 over F_7: A = 8 - 3 - 6 = -1, fails on sign alone
    assert not zero_forcing_inequality(7, 1, 3).forced_zero
    # large field, degree 3: A = 344, B = 2, A^2 > 4 * 343
    assert zero_forcing_inequality(7, 3, 3).forced_zero


def test_inequality_resolved_case_5_2_2():
    # q = 25, d = 2: A = 25 + 1 - 2 - 20 = 4 > 0 and 16 > 0.
    b = zero_forcing_inequality(5, 2, 2)
    assert b.forced_zero
    assert b.exact_terms["A"] == 4


def test_inequality_strictness():
    # A = 0 exactly at q + 1 = d(1 + 2 p^(k-1)); pick d = q = 3 shapes.
    # p=3, k=1, d=1: A = 3 + 1 - 1 - 2 = 1, B = 0: forced.
    assert zero_forcing_inequality(3, 1, 1).forced_zero
    # p=3, k=1, d=4/3 is not integral; use the A^2 vs B^2 q edge instead:
    # p=11, k=1, d=3: A = 12 - 3 - 6 = 3, B = 2, 9 > 44 false.
    b = zero_forcing_inequality(11, 1, 3)
    assert b.exact_terms["A"] == 3 and not b.forced_zero


def test_inequality_validation():
    with pytest.raises(ValueError):
        zero_forcing_inequality(2, 1, 2)
    with pytest.raises(ValueError):
        zero_forcing_inequality(9, 1, 2)
    with pytest.raises(ValueError):
        zero_forcing_inequality(5, 0, 2)
    with pytest.raises(ValueError):
        zero_forcing_inequality(5, 1, 0)


def test_by_count_exact_rational_comparison():
    assert zero_forcing_by_count(5, 2, 5, 1).forced_zero  # 5/2 > 2
    assert not zero_forcing_by_count(4, 2, 5, 1).forced_zero  # 2 > 2 fails
    b = zero_forcing_by_count(7, 3, 3, 2)  # 7/3 > 6 is false
    assert not b.forced_zero
    assert b.cover_lower_bound == Fraction(7, 3)
    with pytest.raises(ValueError):
        zero_forcing_by_count(-1, 2, 5, 1)


def test_conjectural_threshold_drops_factor_two():
    # m/d = 3/2 over F_5: above p^0 = 1 but not above 2.
    assert conjectural_by_count(3, 2, 5, 1)
    assert not zero_forcing_by_count(3, 2, 5, 1).forced_zero
    assert not conjectural_by_count(2, 2, 5, 1)  # 1 > 1 fails


def test_conic_bound_and_claim():
    # q - 1 > 4 p^(k-1); the claim covers all p >= 5 but the
    # inequality itself fails at (5, 1): 4 > 4.
    b = conic_bound(5, 1)
    assert not b.forced_zero and b.claimed_by_statement
    assert b.exact_terms == {"q_minus_1": 4, "four_p_km1": 4}
    assert conic_bound(7, 1).forced_zero
    assert conic_bound(5, 2).forced_zero
    assert not conic_bound(3, 1).forced_zero
    assert not conic_claimed(3, 4)
    assert conic_claimed(5, 1)


def test_elliptic_bound_and_claim():
    # (p - 6)^2 p^(k-1) > 4p with p > 6.
    assert not elliptic_bound(5, 3).forced_zero  # p <= 6: never
    b = elliptic_bound(7, 1)  # 1 > 28 false
    assert not b.forced_zero and not b.claimed_by_statement
    assert elliptic_bound(7, 3).forced_zero  # 49 > 28
    assert elliptic_claimed(7, 3)
    assert elliptic_bound(11, 2).forced_zero and elliptic_claimed(11, 2)
    assert not elliptic_claimed(11, 1)
    assert elliptic_bound(17, 1).forced_zero and elliptic_claimed(17, 1)


def test_claim_formula_matches_computed_on_grid():
    for p in (5, 7, 11, 13, 17, 19, 23):
        for k in (1, 2, 3, 4):
            assert elliptic_bound(p, k).forced_zero == elliptic_claimed(p, k)


def test_deciders_agree_on_seeded_sets():
    import random

    for p, k in ((3, 1), (5, 1), (3, 2), (7, 1)):
        ctx = FqContext(p, k)
        rng = random.Random(1000 * p + k)
        for _ in range(40):
            pts = random_point_set(rng, ctx)
            v1 = decide_by_hyperplanes(pts, ctx)
            v2 = decide_by_exhaustion(pts, ctx)
            assert v1.exists_nonzero == v2.exists_nonzero, pts
            for v in (v1, v2):
                assert verify_witness(v, pts)


def test_decider_methods_and_determinism():
    # over a prime field only scalings are additive, so the single
    # product value g over F_9 leaves genuine room for a witness
    ctx = FqContext(3, 2)
    pts = [(ctx.one(), ctx.decode(3))]
    v1 = decide_by_hyperplanes(pts, ctx)
    v2 = decide_by_exhaustion(pts, ctx)
    assert v1.method == "hyperplane-search"
    assert v2.method == "exhaustive-oracle"
    assert v1.exists_nonzero and v2.exists_nonzero
    # repeated runs give identical witnesses
    again = decide_by_hyperplanes(pts, ctx)
    assert again.witness_map.coeffs == v1.witness_map.coeffs


def test_empty_point_set_has_witness():
    ctx = FqContext(3)
    v = decide_by_hyperplanes([], ctx)
    assert v.exists_nonzero
    assert not v.witness_map.is_zero()
    assert verify_witness(v, [])


def test_full_orbit_set_forces_zero():
    # every nonzero coordinate pair with product structure saturating
    # the field defeats all hyperplanes
    ctx = FqContext(3)
    nz = [e for e in ctx.elements() if not e.is_zero()]
    pts = [(a, b) for a in nz for b in nz]
    assert not decide_by_hyperplanes(pts, ctx).exists_nonzero
    assert not decide_by_exhaustion(pts, ctx).exists_nonzero


def test_decider_context_mismatch():
    ctx3 = FqContext(3)
    ctx5 = FqContext(5)
    pts = [(ctx5.constant(1), ctx5.constant(1))]
    with pytest.raises(ContextMismatch):
        decide_by_hyperplanes(pts, ctx3)
    with pytest.raises(ContextMismatch):
        decide_by_exhaustion(pts, ctx3)


def test_verify_witness_detects_corruption():
    from dataclasses import replace

    ctx = FqContext(3, 2)
    pts = [(ctx.one(), ctx.decode(3))]
    v = decide_by_hyperplanes(pts, ctx)
    assert verify_witness(v, pts)
    # add a point whose product hits a nonzero value of the map
    c = next(
        e for e in ctx.elements()
        if not e.is_zero() and not v.witness_map(e).is_zero()
    )
    assert not verify_witness(v, pts + [(c, c)])
    # zeroed or missing witness fails; a negative verdict is vacuous
    from curvadd import LinearizedMap

    zeroed = replace(v, witness_map=LinearizedMap(ctx, [0] * ctx.k))
    assert not verify_witness(zeroed, pts)
    assert not verify_witness(replace(v, witness_map=None), pts)
    assert verify_witness(replace(v, exists_nonzero=False), pts)


def test_analyze_hyperbola_end_to_end():
    r = analyze(build_curve(7, 1, "x*y - 1"))
    assert not r.decision.exists_nonzero
    assert r.decision.witness_map is None
    assert r.oracle_agreement == "agree"
    assert r.paper_flags == ()
    assert r.inequality1.forced_zero and r.by_count.forced_zero
    assert r.conic.forced_zero
    assert len(r.points) == 6
    assert r.infinity_count == 2
    assert r.hw.verdict == "consistent"
    assert r.conjectural_flag


def test_analyze_oracle_modes():
    c = build_curve(3, 1, "x*y - 1")
    on = analyze(c, oracle="on")
    off = analyze(c, oracle="off")
    assert on.oracle_agreement == "agree"
    assert off.oracle_agreement == "skipped"
    assert off.oracle_verdict is None
    assert on.decision.exists_nonzero == off.decision.exists_nonzero


def test_analyze_claim_curve_flags():
    r3 = analyze(build_curve(3, 1, "y^2 + 2*x*y + 2*y + x"))
    assert len(r3.points) == 5
    assert not r3.decision.exists_nonzero
    # claim mismatches plus hypothesis notes, all surfaced
    assert sum("quadratic-over-F3" in f for f in r3.paper_flags) == 5
    assert sum(f.startswith("hypothesis note") for f in r3.paper_flags) == 3
    assert any("(1, 1)" in f for f in r3.paper_flags)
    assert any("axis-parallel" in f for f in r3.paper_flags)

    r5 = analyze(build_curve(5, 1, "y^2 - x^3 - 3*x - 1"))
    assert len(r5.points) == 4
    assert sum("cubic-over-F5" in f for f in r5.paper_flags) == 3
    assert any("(2, 0)" in f and "singular" in f for f in r5.paper_flags)
    assert r5.singular and [int(x) for x, _ in r5.singular] == [2]


def test_analyze_vacuous_curve():
    r = analyze(build_curve(3, 1, "x^2 + 1"))
    assert len(r.points) == 0
    assert r.decision.exists_nonzero
    assert not r.decision.witness_map.is_zero()


def test_analyze_inconsistent_axis_line():
    with pytest.raises(Inconsistent) as err:
        analyze(build_curve(5, 1, "y"))
    msg = str(err.value)
    assert "force" in msg and "witness" in msg
    assert "axis-parallel" in msg


def test_analyze_inconsistent_extension_line():
    # x = g over F_9: both bounds fire, yet x -> x^3 - g^2 x style maps
    # kill the fixed first coordinate
    with pytest.raises(Inconsistent):
        analyze(build_curve(3, 2, "x - g"))


def test_analyze_inconsistent_split_conic():
    # x^2 - 3 y^2 over F_17 splits into two lines through the origin;
    # (0, 0) contributes nothing and the lines' multiplicative span
    # misses a hyperplane, while the conic bound still fires
    with pytest.raises(Inconsistent) as err:
        analyze(build_curve(17, 1, "x^2 - 3*y^2"))
    assert "conic" in str(err.value)


def test_analyze_forced_without_witness_is_consistent():
    # the quadratic claim curve: forced by count, decider finds none
    r = analyze(build_curve(3, 1, "y^2 + 2*x*y + 2*y + x"))
    assert r.by_count.forced_zero
    assert not r.decision.exists_nonzero


def test_caps_env_override(monkeypatch):
    monkeypatch.setenv("CURVADD_CAP", "99")
    assert field_cap() == 99
    assert oracle_cap() == 99
    assert field_cap(7) == 7  # explicit argument wins
    monkeypatch.delenv("CURVADD_CAP")
    assert field_cap() == 1 << 20
    assert oracle_cap() == 1 << 24
    monkeypatch.setenv("CURVADD_CAP", "not a number")
    with pytest.raises(ValueError):
        field_cap()
