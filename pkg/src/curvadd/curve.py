"""Plane curves over F_{p^k}: point enumeration, points at infinity,
singular-point search over small extensions, the Hasse-Weil window
check, and slicing a surface down to a plane curve.

Smoothness and absolute irreducibility are treated as user assertions
plus best-effort refutation: the tool looks for singular points over a
small extension and checks the point count against the Hasse-Weil
window, but an empty singular scan is reported as "none found up to
degree m", never as a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .caps import field_cap
from .errors import CapExceeded, ParseError
from .fields import FqContext, embed
from .poly import NEG_INF, SparsePoly, parse_bipoly


@dataclass(frozen=True)
class Curve:
    """A plane curve: the zero set of a bivariate polynomial."""

    defining: SparsePoly
    assert_smooth: bool = False
    assert_abs_irreducible: bool = False

    def __post_init__(self):
        if self.defining.nvars != 2:
            raise ValueError("a plane curve needs a polynomial in x and y")
        if self.defining.is_zero():
            raise ValueError("the zero polynomial does not define a curve")
        if self.defining.total_degree < 1:
            raise ValueError("a constant polynomial does not define a curve")

    @property
    def ctx(self):
        return self.defining.ctx

    @property
    def degree(self):
        return self.defining.total_degree

    def expression(self):
        return self.defining.render()

    def __repr__(self):
        return f"Curve({self.expression()} = 0 over {self.ctx!r})"


@dataclass(frozen=True)
class PointSet:
    """Sorted, duplicate-free points; order is by coordinate codes."""

    points: tuple = ()

    @property
    def count(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def _sorted_points(pairs):
    return PointSet(tuple(sorted(pairs, key=lambda pt: (int(pt[0]), int(pt[1])))))


def _dense_row(row, ctx):
    """Univariate SparsePoly -> dense low-to-high coefficient list,
    or None for the zero polynomial.  Rows come from substituting x,
    so degrees stay at most the curve degree; dense Horner evaluation
    beats per-term powering inside the q^2 scans."""
    if row.is_zero():
        return None
    out = [ctx.zero()] * (row.degree_in(0) + 1)
    for (e,), coeff in row.terms.items():
        out[e] = coeff
    return out


def _horner_is_zero(coeffs, y):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * y + c
    return acc.is_zero()


def affine_points(c, cap=None):
    """All (x, y) with defining(x, y) = 0, sorted.

    A plain double scan: substitute each x, then test every y.  The
    scan size p^{2k} is checked against the cap before starting.
    """
    ctx = c.ctx
    limit = field_cap(cap)
    if ctx.order**2 > limit:
        raise CapExceeded("affine point scan", ctx.order**2, limit)
    elements = [ctx.decode(code) for code in range(ctx.order)]
    found = []
    for x in elements:
        row = _dense_row(c.defining.substitute(0, x), ctx)
        if row is None:
            # the vertical line x = const lies on the curve
            found.extend((x, y) for y in elements)
            continue
        for y in elements:
            if _horner_is_zero(row, y):
                found.append((x, y))
    return _sorted_points(found)


def points_at_infinity_count(c, cap=None):
    """Projective roots of the leading form on the line at infinity.

    Roots are (a : 1) for a in the field, plus (1 : 0) when the pure
    x^d term is absent; the count never exceeds d.
    """
    ctx = c.ctx
    limit = field_cap(cap)
    if ctx.order > limit:
        raise CapExceeded("infinity root scan", ctx.order, limit)
    lead = c.defining.leading_form()
    count = 0
    one = ctx.one()
    for code in range(ctx.order):
        if lead.evaluate((ctx.decode(code), one)).is_zero():
            count += 1
    if lead.evaluate((one, ctx.zero())).is_zero():
        count += 1
    return count


def singular_points(c, ext_degree=2, cap=None):
    """Points over F_{p^(k*ext_degree)} where the defining polynomial
    and both partials vanish.

    An empty result only means no singular point was found up to this
    extension degree; it is not a smoothness certificate.
    """
    ext_degree = int(ext_degree)
    if ext_degree < 1:
        raise ValueError(f"ext_degree must be >= 1, got {ext_degree}")
    ctx = c.ctx
    if ext_degree == 1:
        ext = ctx
    else:
        ext = FqContext(ctx.p, ctx.k * ext_degree)
    limit = field_cap(cap)
    if ext.order**2 > limit:
        raise CapExceeded(
            f"singular scan over F_{ctx.p}^{ext.k}", ext.order**2, limit
        )

    def lift(poly):
        if ext is ctx:
            return poly
        return SparsePoly(
            ext, 2, {e: embed(v, ext, cap=limit) for e, v in poly.terms.items()}
        )

    f = lift(c.defining)
    fx = lift(c.defining.partial(0))
    fy = lift(c.defining.partial(1))
    elements = [ext.decode(code) for code in range(ext.order)]
    zero_row = (ext.zero(),)
    found = []
    for x in elements:
        rows = [
            _dense_row(poly.substitute(0, x), ext) or zero_row
            for poly in (f, fx, fy)
        ]
        for y in elements:
            if (
                _horner_is_zero(rows[0], y)
                and _horner_is_zero(rows[1], y)
                and _horner_is_zero(rows[2], y)
            ):
                found.append((x, y))
    return _sorted_points(found)


@dataclass(frozen=True)
class HWWindow:
    """The point-count window |N - (q+1)| <= 2 * g_bound * sqrt(q).

    The comparison is done exactly by squaring: (N - q - 1)^2 against
    4 * g_bound^2 * q; lower/upper are the integer-rounded endpoints
    for display only.  verdict is "consistent" or "violates-window";
    a violation is evidence that the smoothness / absolute
    irreducibility hypotheses fail for this curve.
    """

    q: int
    n_points: int
    affine_count: int
    infinity_count: int
    genus_bound: int
    lower: int
    upper: int
    verdict: str


def hasse_weil_window(c, cap=None, affine_count=None, infinity_count=None):
    """Exact window check for N = affine count + infinity count.

    Counts are enumerated unless supplied by the caller (analyze passes
    them in to avoid re-scanning).
    """
    if affine_count is None:
        affine_count = affine_points(c, cap).count
    if infinity_count is None:
        infinity_count = points_at_infinity_count(c, cap)
    q = c.ctx.order
    d = c.degree
    g_bound = (d - 1) * (d - 2) // 2
    n = affine_count + infinity_count
    center = q + 1
    radius_sq = 4 * g_bound * g_bound * q
    ok = (n - center) ** 2 <= radius_sq
    half = math.isqrt(radius_sq)
    return HWWindow(
        q=q,
        n_points=n,
        affine_count=affine_count,
        infinity_count=infinity_count,
        genus_bound=g_bound,
        lower=center - half,
        upper=center + half,
        verdict="consistent" if ok else "violates-window",
    )


def axis_parallel_lines(c, cap=None):
    """Lines x = a or y = b contained in the curve, as strings.

    Such a component makes the vanishing condition degenerate (the
    coordinate 0 case) or breaks the vertex-degree bound behind the
    counting argument, so analyze surfaces them as hypothesis notes.
    """
    ctx = c.ctx
    limit = field_cap(cap)
    if ctx.order > limit:
        raise CapExceeded("axis line scan", ctx.order, limit)
    lines = []
    for code in range(ctx.order):
        v = ctx.decode(code)
        if c.defining.substitute(0, v).is_zero():
            lines.append(f"x = {v!r}")
        if c.defining.substitute(1, v).is_zero():
            lines.append(f"y = {v!r}")
    return lines


# ---------------------------------------------------------------------------
# Surfaces.


def slice_surface(surface, var, value):
    """Substitute a value into one variable of a trivariate polynomial
    and return the resulting plane curve.

    Raises if the slice degenerates: the zero polynomial (the slice is
    the whole plane) or a nonzero constant (the slice is empty).
    """
    if surface.nvars != 3:
        raise ValueError("slice_surface expects a polynomial in x, y, z")
    if isinstance(var, str):
        try:
            var = ("x", "y", "z").index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None
    sliced = surface.substitute(var, value)
    if sliced.is_zero():
        raise ValueError(
            f"substituting {value!r} gives the zero polynomial; "
            "the slice is the whole plane"
        )
    if sliced.total_degree < 1:
        raise ValueError(
            f"substituting {value!r} gives a nonzero constant; the slice is empty"
        )
    return Curve(defining=sliced)


@dataclass(frozen=True)
class SliceProfile:
    """Minimum slice degree per variable, against the floor(2d/3) target.

    min_degree maps each variable name to the smallest total degree
    over all field values substituted into it (None when every slice of
    some value degenerates to the zero polynomial).  achieved says
    whether any variable admits a value with slice degree <= target.
    """

    degree: int
    target: int
    min_degree: dict = field(default_factory=dict)
    achieved: bool = False


def slice_degree_profile(surface, cap=None):
    """Scan all values for each variable and report minimum degrees.

    Supports auditing the claim that some variable always admits a
    slice of degree at most floor(2d/3): the profile reports the facts
    and the caller compares; nothing here asserts the claim.
    """
    if surface.nvars != 3:
        raise ValueError("slice_degree_profile expects a polynomial in x, y, z")
    if surface.is_zero():
        raise ValueError("zero polynomial has no slices")
    ctx = surface.ctx
    limit = field_cap(cap)
    if 3 * ctx.order > limit:
        raise CapExceeded("slice degree scan", 3 * ctx.order, limit)
    d = surface.total_degree
    target = (2 * d) // 3
    mins = {}
    for idx, name in enumerate(("x", "y", "z")):
        best = None
        for code in range(ctx.order):
            sliced = surface.substitute(idx, ctx.decode(code))
            deg = sliced.total_degree
            if deg is NEG_INF:
                continue
            if best is None or deg < best:
                best = deg
        mins[name] = best
    achieved = any(v is not None and v <= target for v in mins.values())
    return SliceProfile(degree=d, target=target, min_degree=mins, achieved=achieved)


# ---------------------------------------------------------------------------
# Curve file format:
#
#   p = 5
#   k = 1
#   modulus = [0, 1]            (optional)
#   f = y^2 - x^3 - 3*x - 1
#   assert_smooth = true        (optional)
#   assert_abs_irreducible = true   (optional)
#
# Blank lines and lines starting with '#' are ignored.


_BOOL_KEYS = ("assert_smooth", "assert_abs_irreducible")


def parse_curve_file(text):
    """Parse the line-oriented curve file format into a Curve."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in ("p", "k", "modulus", "f") + _BOOL_KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        values[key] = (lineno, value)

    for required in ("p", "k", "f"):
        if required not in values:
            raise ParseError(f"curve file is missing '{required} = ...'")

    def int_value(key):
        lineno, raw = values[key]
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"line {lineno}: {key} must be an integer") from None

    p = int_value("p")
    k = int_value("k")
    modulus = None
    if "modulus" in values:
        lineno, raw = values["modulus"]
        if not (raw.startswith("[") and raw.endswith("]")):
            raise ParseError(f"line {lineno}: modulus must look like [c0,c1,...]")
        body = raw[1:-1].strip()
        try:
            modulus = [int(part) for part in body.split(",")] if body else []
        except ValueError:
            raise ParseError(
                f"line {lineno}: modulus entries must be integers"
            ) from None

    flags = {}
    for key in _BOOL_KEYS:
        if key not in values:
            flags[key] = False
            continue
        lineno, raw = values[key]
        if raw not in ("true", "false"):
            raise ParseError(f"line {lineno}: {key} must be true or false")
        flags[key] = raw == "true"

    ctx = FqContext(p, k, modulus)  # ValueError on bad field parameters
    defining = parse_bipoly(values["f"][1], ctx)
    if defining.is_zero() or defining.total_degree < 1:
        raise ParseError("f must be a nonconstant polynomial")
    return Curve(
        defining=defining,
        assert_smooth=flags["assert_smooth"],
        assert_abs_irreducible=flags["assert_abs_irreducible"],
    )


def load_curve_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_curve_file(handle.read())
