"""Exact arithmetic in prime fields F_p and extensions F_{p^k}.

An element of F_{p^k} is a coefficient vector (c_0, ..., c_{k-1}) over
F_p in the power basis 1, g, ..., g^{k-1}, where g is a root of a monic
irreducible modulus polynomial of degree k over F_p.  Every operation is
exact integer arithmetic; nothing here touches floating point.

The modulus can be supplied explicitly (coefficients low to high,
including the leading 1) or found deterministically: the search takes
the monic irreducible polynomial whose non-leading coefficients form the
smallest integer under the encoding sum(c_i * p^i).  For k = 1 the
modulus is the polynomial g itself and elements are bare residues.

Contexts and elements are immutable and hashable.  Elements carry their
context, and mixing contexts raises ContextMismatch rather than
guessing an embedding.
"""

from __future__ import annotations

from functools import lru_cache

from .caps import field_cap
from .errors import CapExceeded, ContextMismatch

# Largest prime accepted for p.  Keeps p inside the range where the
# fixed Miller-Rabin base set below is a proven primality certificate.
MAX_PRIME = (1 << 63) - 1

# Witness set proven deterministic for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic primality test for 0 <= n <= MAX_PRIME."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Coefficient-list polynomial helpers over F_p.  Lists are low-to-high
# and trimmed; [] is the zero polynomial.  These are private plumbing
# for modulus handling and element inversion.


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _trim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] = (out[i + j] + av * bv) % p
    return _trim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = a[:]
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * inv_lead % p
        q[shift] = factor
        for i, bv in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bv) % p
        _trim(a)
    return _trim(q), a


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [v * inv % p for v in a]
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _is_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over F_p.

    f of degree k is irreducible iff gcd(f, g^(p^i) - g) = 1 for every
    1 <= i <= k // 2 (any factor of degree d <= k/2 would divide one of
    those) and f has no repeated structure to worry about beyond that.
    """
    f = list(coeffs)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False  # divisible by g
    x = [0, 1]
    xq = x
    for _ in range(k // 2):
        xq = _ppowmod(xq, p, f, p)
        if len(_pgcd(_psub(xq, x, p), f, p)) != 1:
            return False
    return True


def _find_modulus(p, k):
    """Smallest monic irreducible degree-k modulus, by the integer
    encoding sum(c_i * p^i) of the non-leading coefficients."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        coeffs = []
        n = code
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible modulus found for p={p}, k={k}")


# ---------------------------------------------------------------------------


class FqContext:
    """A concrete presentation of F_{p^k}.

    Two contexts are equal iff they share p, k and the modulus, so
    elements from equal contexts mix freely.
    """

    __slots__ = ("p", "k", "modulus", "order", "_hash")

    def __init__(self, p, k=1, modulus=None):
        p = int(p)
        k = int(k)
        if p < 3 or p % 2 == 0:
            raise ValueError(f"p must be an odd prime, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"p too large: {p} > {MAX_PRIME}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if modulus is None:
            modulus = _find_modulus(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1:
                raise ValueError(
                    f"modulus needs {k + 1} coefficients (degree {k}), "
                    f"got {len(modulus)}"
                )
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if k == 1:
                if modulus != (0, 1):
                    raise ValueError(
                        "for k = 1 the modulus must be [0, 1], i.e. g itself"
                    )
            elif not _is_irreducible(list(modulus), p):
                raise ValueError(
                    f"modulus {list(modulus)} is reducible over F_{p}"
                )
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        self._hash = hash((p, k, modulus))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("FqContext is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, FqContext):
            return NotImplemented
        return (
            self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.k == 1:
            return f"FqContext(p={self.p})"
        return f"FqContext(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    # -- element constructors ------------------------------------------------

    def element(self, coeffs):
        """Element from a coefficient sequence (low to high, length <= k)."""
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise ValueError(
                f"too many coefficients: {len(coeffs)} > k = {self.k}"
            )
        coeffs.extend([0] * (self.k - len(coeffs)))
        return FqElement(self, tuple(coeffs))

    def constant(self, c):
        """The image of the integer c under F_p -> F_{p^k}."""
        return self.element([int(c)])

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def gen(self):
        """The generator g (root of the modulus).  Undefined for k = 1."""
        if self.k == 1:
            raise ValueError("F_p has no extension generator; g needs k >= 2")
        return self.element([0, 1])

    def decode(self, code):
        """Inverse of int(element): base-p digits of code, low to high."""
        code = int(code)
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range [0, {self.order})")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(code % self.p)
            code //= self.p
        return FqElement(self, tuple(coeffs))

    def elements(self, cap=None):
        """All field elements in code order (0, 1, ..., p-1, g, 1+g, ...)."""
        limit = field_cap(cap)
        if self.order > limit:
            raise CapExceeded(f"enumerating F_{self.p}^{self.k}", self.order, limit)
        for code in range(self.order):
            yield self.decode(code)

    def _check(self, other):
        if other.ctx != self:
            raise ContextMismatch(
                f"element of {other.ctx!r} used in {self!r}"
            )


class FqElement:
    """An element of an FqContext.  Immutable.

    Integers coerce to constants on the prime subfield, so ``x + 1`` and
    ``3 * x`` work.  int(x) returns the code sum(c_i * p^i), which also
    defines the canonical enumeration order.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FqElement is immutable")

    # -- basic protocol ------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __int__(self):
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.ctx.p + c
        return code

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.constant(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if not any(self.coeffs):
            return "0"
        parts = []
        for i in range(self.ctx.k - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "g" if i == 1 else f"g^{i}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ctx.constant(other)
        if isinstance(other, FqElement):
            self.ctx._check(other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        return FqElement(
            self.ctx,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FqElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        return FqElement(
            self.ctx,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx = self.ctx
        if ctx.k == 1:
            return FqElement(ctx, ((self.coeffs[0] * other.coeffs[0]) % ctx.p,))
        prod = _pmul(list(self.coeffs), list(other.coeffs), ctx.p)
        red = _pmod(prod, list(ctx.modulus), ctx.p)
        red.extend([0] * (ctx.k - len(red)))
        return FqElement(ctx, tuple(red))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero")
        ctx = self.ctx
        if ctx.k == 1:
            return FqElement(ctx, (pow(self.coeffs[0], -1, ctx.p),))
        # extended Euclid on coefficient polynomials
        p = ctx.p
        r0, r1 = list(ctx.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        inv_c = pow(r0[0], -1, p)
        out = [v * inv_c % p for v in s0]
        out = _pmod(out, list(ctx.modulus), p)
        out.extend([0] * (ctx.k - len(out)))
        return FqElement(ctx, tuple(out))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- field structure -----------------------------------------------------

    def frobenius(self, i=1):
        """x -> x^(p^i).  i is taken mod k (Frobenius has order k)."""
        i = int(i) % self.ctx.k
        out = self
        for _ in range(i):
            out = out ** self.ctx.p
        return out

    def trace(self):
        """Trace to F_p: sum of x^(p^i) for 0 <= i < k, as an element."""
        acc = self
        cur = self
        for _ in range(self.ctx.k - 1):
            cur = cur ** self.ctx.p
            acc = acc + cur
        return acc

    def in_prime_field(self):
        return not any(self.coeffs[1:])


# ---------------------------------------------------------------------------
# Embeddings between contexts over the same prime.


@lru_cache(maxsize=None)
def _embedding_root(src, dst):
    """First root (code order) of src's modulus inside dst."""
    if src.p != dst.p:
        raise ContextMismatch(
            f"no embedding between characteristics {src.p} and {dst.p}"
        )
    if dst.k % src.k != 0:
        raise ContextMismatch(
            f"F_{src.p}^{src.k} does not embed in F_{dst.p}^{dst.k}"
        )
    mod = src.modulus
    for code in range(dst.order):
        x = dst.decode(code)
        acc = dst.zero()
        for c in reversed(mod):
            acc = acc * x + c
        if acc.is_zero():
            return x
    raise RuntimeError("embedding root not found; irreducibility is broken")


def embed(a, dst, cap=None):
    """Embed an element into a larger context over the same prime.

    The embedding sends the source generator to the first root of the
    source modulus in the destination (in code order), so it is
    deterministic.  Finding that root scans the destination field once;
    the scan is cached per context pair and capped.
    """
    if a.ctx == dst:
        return a
    limit = field_cap(cap)
    if dst.order > limit:
        raise CapExceeded("embedding root scan", dst.order, limit)
    root = _embedding_root(a.ctx, dst)
    acc = dst.zero()
    for c in reversed(a.coeffs):
        acc = acc * root + c
    return acc


def make_context(p, k=1, modulus=None):
    """Convenience constructor mirroring FqContext(p, k, modulus)."""
    return FqContext(p, k, modulus)


# ---------------------------------------------------------------------------
# Functional spellings.  The element methods above are the primary API;
# these wrappers exist for callers that prefer explicit operations.


def fq_add(a, b):
    return a + b


def fq_sub(a, b):
    return a - b


def fq_mul(a, b):
    return a * b


def fq_neg(a):
    return -a


def fq_inv(a):
    return a.inverse()


def frobenius(a, i=1):
    """a^(p^i), the i-th power of the Frobenius automorphism."""
    return a.frobenius(i)


def trace(a):
    """Trace down to the prime field: sum of a^(p^i) for 0 <= i < k."""
    return a.trace()


def enumerate_elements(ctx, cap=None):
    """All elements of the field in code order, as a list, capped."""
    return list(ctx.elements(cap))
