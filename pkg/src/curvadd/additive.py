"""Additive (F_p-linear) self-maps of F_{p^k} and their kernels.

Every additive map on F_{p^k} is a linearized polynomial
f(x) = sum a_i x^(p^i) with k coefficients a_i in the field, and the
correspondence with k x k matrices over F_p is a bijection.  Kernels
are F_p-subspaces, held in reduced row-echelon canonical form so equal
subspaces compare equal structurally.

Hyperplanes ((k-1)-dimensional subspaces) are exactly the kernels of
trace functionals x -> Tr(a x); scaling a by the prime subfield leaves
the kernel unchanged, so enumerating one representative per scalar
class yields each hyperplane exactly once.
"""

from __future__ import annotations

import itertools

from .caps import field_cap, oracle_cap
from .errors import CapExceeded, ContextMismatch


# ---------------------------------------------------------------------------
# Row operations over F_p.  Rows are lists of ints in [0, p).


def rref_mod_p(rows, p):
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    m = [[v % p for v in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace_mod_p(rows, p, ncols):
    """Canonical basis (RREF rows) of the right null space."""
    red, pivots = rref_mod_p(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-red[r][f]) % p
        basis.append(vec)
    canon, _ = rref_mod_p(basis, p)
    return canon


def solve_mod_p(matrix, rhs, p):
    """Unique solution of matrix @ x = rhs; raises if the system is
    singular (callers use it only on invertible systems)."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref_mod_p(aug, p)
    if len(pivots) != n or n in pivots:
        raise ValueError("singular system")
    x = [0] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return x


# ---------------------------------------------------------------------------


class Subspace:
    """An F_p-subspace of F_{p^k} in canonical (RREF) basis form.

    Basis rows are coordinate vectors in the 1, g, ..., g^(k-1) basis.
    Two Subspace values are equal iff they are the same subspace.
    """

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        canon, _ = rref_mod_p([list(r) for r in rows], ctx.p)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in canon))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_elements(cls, ctx, elements):
        return cls(ctx, [list(e.coeffs) for e in elements])

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, element):
        if element.ctx != self.ctx:
            raise ContextMismatch("membership test across contexts")
        p = self.ctx.p
        vec = list(element.coeffs)
        for row in self.rows:
            lead = next(i for i, v in enumerate(row) if v)
            if vec[lead]:
                factor = vec[lead]
                vec = [(a - factor * b) % p for a, b in zip(vec, row)]
        return not any(vec)

    def elements(self):
        """All p^dim members, deterministic order."""
        p = self.ctx.p
        for combo in itertools.product(range(p), repeat=self.dim):
            coeffs = [0] * self.ctx.k
            for c, row in zip(combo, self.rows):
                for i, v in enumerate(row):
                    coeffs[i] = (coeffs[i] + c * v) % p
            yield self.ctx.element(coeffs)

    def basis_elements(self):
        return [self.ctx.element(row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ctx == other.ctx and self.rows == other.rows

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def __repr__(self):
        if not self.rows:
            return "Subspace({0})"
        return f"Subspace(dim={self.dim}, basis={[list(r) for r in self.rows]})"


class LinearizedMap:
    """f(x) = sum a_i x^(p^i), the canonical form of an additive map."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        coeffs = tuple(
            ctx.constant(c) if isinstance(c, int) else c for c in coeffs
        )
        if len(coeffs) != ctx.k:
            raise ValueError(f"need k = {ctx.k} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.ctx != ctx:
                raise ContextMismatch("coefficient from a different context")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LinearizedMap is immutable")

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [0] * ctx.k)

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, [1] + [0] * (ctx.k - 1))

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __call__(self, x):
        if x.ctx != self.ctx:
            raise ContextMismatch("argument from a different context")
        acc = self.ctx.zero()
        power = x
        for i, a in enumerate(self.coeffs):
            if i:
                power = power**self.ctx.p
            if not a.is_zero():
                acc = acc + a * power
        return acc

    def to_matrix(self):
        """k x k matrix over F_p whose column j holds the coordinates
        of f(g^j)."""
        ctx = self.ctx
        k = ctx.k
        cols = []
        basis = ctx.one()
        g = ctx.element([0, 1]) if k > 1 else None
        for j in range(k):
            if j:
                basis = basis * g
            cols.append(self(basis).coeffs)
        return tuple(
            tuple(cols[j][r] for j in range(k)) for r in range(k)
        )

    @classmethod
    def from_matrix(cls, ctx, matrix):
        """The unique linearized polynomial with this matrix."""
        k = ctx.k
        rows = [list(r) for r in matrix]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"need a {k}x{k} matrix")
        # Unknowns z[(i, c)] = coefficient of g^c in a_i; the action on
        # each basis element g^j is linear in the unknowns.
        basis_frob = []
        basis = ctx.one()
        g = ctx.element([0, 1]) if k > 1 else None
        for j in range(k):
            if j:
                basis = basis * g
            basis_frob.append([basis.frobenius(i) for i in range(k)])
        powers = [ctx.decode(ctx.p**c) if c else ctx.one() for c in range(k)]
        system = []
        rhs = []
        for r in range(k):
            for j in range(k):
                row = []
                for i in range(k):
                    for c in range(k):
                        row.append((powers[c] * basis_frob[j][i]).coeffs[r])
                system.append(row)
                rhs.append(rows[r][j] % ctx.p)
        z = solve_mod_p(system, rhs, ctx.p)
        coeffs = [
            ctx.element(z[i * k : (i + 1) * k]) for i in range(k)
        ]
        return cls(ctx, coeffs)

    def kernel(self):
        """Null space of the map as a canonical Subspace."""
        matrix = self.to_matrix()
        basis = nullspace_mod_p([list(r) for r in matrix], self.ctx.p, self.ctx.k)
        return Subspace(self.ctx, basis)

    def __eq__(self, other):
        if not isinstance(other, LinearizedMap):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "LinearizedMap(0)"
        p = self.ctx.p
        parts = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            var = "x" if i == 0 else f"x^{p**i}"
            acoef = repr(a)
            if acoef == "1":
                parts.append(var)
            elif "+" in acoef:
                parts.append(f"({acoef})*{var}")
            else:
                parts.append(f"{acoef}*{var}")
        return f"LinearizedMap({' + '.join(parts)})"


def eval_map(f, x):
    """Apply a linearized map to a field element."""
    return f(x)


def trace_functional(a):
    """The map x -> Tr(a x) as a linearized polynomial: a_i = a^(p^i).

    Its kernel is a hyperplane (dimension k - 1) for every a != 0.
    """
    if a.is_zero():
        raise ValueError("trace functional needs a nonzero multiplier")
    ctx = a.ctx
    coeffs = []
    power = a
    for i in range(ctx.k):
        if i:
            power = power**ctx.p
        coeffs.append(power)
    return LinearizedMap(ctx, coeffs)


def hyperplane_functionals(ctx, cap=None):
    """One trace functional per hyperplane, in code order of the
    scalar-class representative a (highest nonzero coordinate = 1)."""
    limit = field_cap(cap)
    count = (ctx.order - 1) // (ctx.p - 1)
    if count > limit:
        raise CapExceeded("hyperplane enumeration", count, limit)
    for code in range(1, ctx.order):
        a = ctx.decode(code)
        top = next(
            a.coeffs[i] for i in range(ctx.k - 1, -1, -1) if a.coeffs[i]
        )
        if top != 1:
            continue
        yield trace_functional(a)


def enumerate_hyperplanes(ctx, cap=None):
    """All (p^k - 1)/(p - 1) hyperplanes, each exactly once."""
    for functional in hyperplane_functionals(ctx, cap):
        yield functional.kernel()


def enumerate_all_maps(ctx, cap=None, include_zero=True):
    """Every linearized map, coefficient vectors in code order."""
    limit = oracle_cap(cap)
    total = ctx.order**ctx.k
    if total > limit:
        raise CapExceeded("exhaustive map enumeration", total, limit)
    elements = [ctx.decode(code) for code in range(ctx.order)]
    for combo in itertools.product(elements, repeat=ctx.k):
        if not include_zero and all(c.is_zero() for c in combo):
            continue
        yield LinearizedMap(ctx, combo)
