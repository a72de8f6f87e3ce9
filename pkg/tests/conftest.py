"""Shared test corpus and helpers.

The curve corpus stays clear of axis-parallel line components: for
those the counting argument's hypotheses fail by design and analyze
raises Inconsistent; dedicated tests cover that behavior separately.
"""

import random

from curvadd import Curve, FqContext, parse_bipoly

# (p, k, expression, assert_smooth, assert_abs_irreducible)
CORPUS = (
    (3, 1, "x*y - 1", True, True),
    (5, 1, "x*y - 1", True, True),
    (7, 1, "x*y - 1", True, True),
    (3, 2, "x*y - 1", True, True),
    (5, 2, "x*y - 1", True, True),
    (3, 3, "x*y - 1", True, True),
    (7, 2, "x*y - 1", True, True),
    (3, 1, "y^2 + 2*x*y + 2*y + x", False, False),
    (5, 1, "y^2 - x^3 - 3*x - 1", False, False),
    (5, 1, "x^2 + y^2 - 1", True, True),
    (7, 1, "x^2 + y^2 - 1", True, True),
    (7, 1, "y - x^2", True, True),
    (7, 1, "y^2 - x^3 - x", True, True),
    (5, 1, "y^2 - x^3 - x - 2", True, True),
    (5, 1, "x^2 - y^2", False, False),
    (3, 2, "x^2 + g*y^2 + g", True, True),
    (3, 2, "x^4 + y^4 + 1", True, True),
)

HYPERBOLA_FIELDS = ((3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2))


def build_curve(p, k, expr, smooth=False, irred=False):
    ctx = FqContext(p, k)
    return Curve(
        parse_bipoly(expr, ctx),
        assert_smooth=smooth,
        assert_abs_irreducible=irred,
    )


def corpus_curves():
    return [build_curve(*entry) for entry in CORPUS]


def random_point_set(rng, ctx, max_points=8):
    """Seeded random affine point set over ctx, possibly empty."""
    n = rng.randint(0, max_points)
    codes = {
        (rng.randrange(ctx.order), rng.randrange(ctx.order)) for _ in range(n)
    }
    return [(ctx.decode(a), ctx.decode(b)) for a, b in sorted(codes)]


def seeded_rng(seed):
    return random.Random(seed)
