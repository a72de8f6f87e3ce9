"""Exact polynomial and rational-function arithmetic, plus the
expression parser for curve definitions.

Three layers live here:

* UniPoly: univariate polynomials with coefficients in a *domain*,
  which is either the rationals (stdlib Fraction, arbitrary precision)
  or a finite field context.  The zero polynomial has degree -infinity,
  held as the float sentinel NEG_INF.
* RationalFunction: quotients of UniPoly over the same domain, kept
  eagerly in canonical form (gcd-reduced, monic denominator).
* SparsePoly: sparse multivariate polynomials over a finite field
  context, used for curve-defining polynomials (2 variables) and
  surfaces (3 variables).  Terms map exponent tuples to nonzero
  coefficients.

The expression grammar, shared by the parser and the renderer:

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := uint | <variable> | 'g' | '(' expr ')'

Variables default to x and y (x, y, z for surfaces); 'g' is the
extension-field generator and is rejected when k = 1; integer literals
reduce mod p; whitespace is ignored; the leading '-' is sugar for
multiplying the first term by p - 1.  Parse errors carry the 0-based
character position of the offending input.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatch, ParseError
from .fields import FqContext, FqElement

# Degree of the zero polynomial.
NEG_INF = float("-inf")

# Exact rational numbers: stdlib Fraction already maintains the
# canonical form (reduced, positive denominator).
BigRational = Fraction


# ---------------------------------------------------------------------------
# Coefficient domains.  A domain knows how to coerce raw values and
# supplies its zero and one; polynomial code is otherwise generic.


class _RationalDomain:
    """The field Q with Fraction coefficients."""

    __slots__ = ()

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot use {value!r} as a rational coefficient")

    def __eq__(self, other):
        return isinstance(other, _RationalDomain)

    def __hash__(self):
        return hash(_RationalDomain)

    def __repr__(self):
        return "QQ"


QQ = _RationalDomain()


class _FieldDomain:
    """A finite field context used as a coefficient domain."""

    __slots__ = ("ctx",)

    def __init__(self, ctx):
        self.ctx = ctx

    @property
    def zero(self):
        return self.ctx.zero()

    @property
    def one(self):
        return self.ctx.one()

    def coerce(self, value):
        if isinstance(value, FqElement):
            if value.ctx != self.ctx:
                raise ContextMismatch(
                    f"coefficient from {value.ctx!r} used over {self.ctx!r}"
                )
            return value
        if isinstance(value, int):
            return self.ctx.constant(value)
        raise TypeError(f"cannot use {value!r} as a coefficient over {self.ctx!r}")

    def __eq__(self, other):
        return isinstance(other, _FieldDomain) and self.ctx == other.ctx

    def __hash__(self):
        return hash(("_FieldDomain", self.ctx))

    def __repr__(self):
        return f"field_domain({self.ctx!r})"


def field_domain(ctx):
    """Coefficient domain wrapping a finite field context."""
    if not isinstance(ctx, FqContext):
        raise TypeError("field_domain expects an FqContext")
    return _FieldDomain(ctx)


# ---------------------------------------------------------------------------


class UniPoly:
    """Univariate polynomial over a domain; coefficients low to high.

    Immutable; no trailing zeros are stored, so the zero polynomial has
    an empty coefficient tuple and degree NEG_INF.
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs=()):
        cs = [domain.coerce(c) for c in coeffs]
        while cs and cs[-1] == domain.zero:
            cs.pop()
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls, domain):
        return cls(domain, ())

    @classmethod
    def one(cls, domain):
        return cls(domain, (domain.one,))

    @classmethod
    def variable(cls, domain):
        """The polynomial t."""
        return cls(domain, (domain.zero, domain.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.domain != self.domain:
                raise ContextMismatch("polynomials over different domains")
            return other
        try:
            return UniPoly(self.domain, (self.domain.coerce(other),))
        except (TypeError, ContextMismatch):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.domain,
            [self.coeff(i) + other.coeff(i) for i in range(n)],
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.domain,
            [self.coeff(i) - other.coeff(i) for i in range(n)],
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
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.domain)
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.domain.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.domain, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.domain.coerce(c)
        return UniPoly(self.domain, [a * c for a in self.coeffs])

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one(self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(other, self)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = self.domain.zero
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = self.domain.one / other.leading
        q = [zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            factor = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            q[shift] = factor
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * b
            while rem and rem[-1] == zero:
                rem.pop()
        return UniPoly(self.domain, q), UniPoly(self.domain, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.domain.one / self.leading)

    def __call__(self, value):
        """Evaluate by Horner; accepts a domain value or a
        RationalFunction over the same domain (composition)."""
        if isinstance(value, RationalFunction):
            if value.domain != self.domain:
                raise ContextMismatch("composition across domains")
            acc = RationalFunction.constant(self.domain, self.domain.zero)
            for c in reversed(self.coeffs):
                acc = acc * value + RationalFunction.constant(self.domain, c)
            return acc
        value = self.domain.coerce(value)
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def render(self, var="t"):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == self.domain.zero:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            power = var if i == 1 else f"{var}^{i}"
            if c == self.domain.one:
                parts.append(power)
            else:
                cs = str(c)
                if "+" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{power}")
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return self.render()


def unipoly_divmod(a, b):
    """Quotient and remainder with deg r < deg b; exact arithmetic."""
    return divmod(a, b)


def unipoly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if a.domain != b.domain:
        raise ContextMismatch("gcd across domains")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of two UniPoly over one domain, canonical form.

    Invariants: den != 0, gcd(num, den) = 1, den monic; the zero
    function is 0/1.  All operations re-canonicalize eagerly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = UniPoly.one(num.domain)
        if num.domain != den.domain:
            raise ContextMismatch("numerator and denominator domains differ")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = UniPoly.one(num.domain)
        else:
            g = unipoly_gcd(num, den)
            if g.degree != 0:
                num = num // g
                den = den // g
            inv_lead = num.domain.one / den.leading
            if inv_lead != num.domain.one:
                num = num.scale(inv_lead)
                den = den.scale(inv_lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def domain(self):
        return self.num.domain

    @classmethod
    def constant(cls, domain, c):
        return cls(UniPoly(domain, (domain.coerce(c),)))

    @classmethod
    def variable(cls, domain):
        """The rational function t."""
        return cls(UniPoly.variable(domain))

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.domain != self.domain:
                raise ContextMismatch("rational functions over different domains")
            return other
        if isinstance(other, UniPoly):
            if other.domain != self.domain:
                raise ContextMismatch("rational functions over different domains")
            return RationalFunction(other)
        try:
            return RationalFunction.constant(self.domain, other)
        except (TypeError, ContextMismatch):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

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
        result = RationalFunction.constant(self.domain, self.domain.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def polynomial_part(self):
        """The quotient of num by den; constant exactly when the
        function lies in the valuation ring of the degree valuation."""
        return self.num // self.den

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RationalFunction) else other
        if other is None or not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"


def rf_normalize(num, den):
    """Canonical rational function num/den (reduced, monic denominator)."""
    return RationalFunction(num, den)


def rf_add(a, b):
    return a + b


def rf_mul(a, b):
    return a * b


def rf_inv(a):
    return a.inverse()


# ---------------------------------------------------------------------------


_DEFAULT_NAMES = ("x", "y", "z")


class SparsePoly:
    """Sparse multivariate polynomial over a finite field context.

    terms maps exponent tuples (one entry per variable) to nonzero
    FqElement coefficients.  Immutable.  Display order is graded
    lexicographic, highest first.
    """

    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx, nvars, terms=()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} needs {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if isinstance(coeff, int):
                coeff = ctx.constant(coeff)
            elif coeff.ctx != ctx:
                raise ContextMismatch("coefficient from a different context")
            if exps in clean:
                coeff = clean[exps] + coeff
            if coeff.is_zero():
                clean.pop(exps, None)
            else:
                clean[exps] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    @classmethod
    def zero(cls, ctx, nvars=2):
        return cls(ctx, nvars)

    @classmethod
    def constant(cls, ctx, value, nvars=2):
        return cls(ctx, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, ctx, index, nvars=2):
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(ctx, nvars, {exps: ctx.one()})

    @property
    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, index):
        if not self.terms:
            return NEG_INF
        return max(e[index] for e in self.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), item[0]),
            reverse=True,
        )

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SparsePoly):
            raise TypeError("expected a SparsePoly")
        if other.ctx != self.ctx or other.nvars != self.nvars:
            raise ContextMismatch("polynomials over different contexts")

    def __add__(self, other):
        if isinstance(other, (int, FqElement)):
            other = SparsePoly.constant(self.ctx, other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = acc
        return SparsePoly(self.ctx, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(
            self.ctx, self.nvars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, FqElement)):
            other = SparsePoly.constant(self.ctx, other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FqElement)):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(exps)
                acc = c if acc is None else acc + c
                if acc.is_zero():
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return SparsePoly(self.ctx, self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        if isinstance(c, int):
            c = self.ctx.constant(c)
        if c.is_zero():
            return SparsePoly.zero(self.ctx, self.nvars)
        return SparsePoly(
            self.ctx, self.nvars, {e: v * c for e, v in self.terms.items()}
        )

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.constant(self.ctx, 1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation and calculus ----------------------------------------------

    def evaluate(self, values):
        values = tuple(values)
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        for v in values:
            if v.ctx != self.ctx:
                raise ContextMismatch("evaluation point from a different context")
        acc = self.ctx.zero()
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def substitute(self, index, value):
        """Plug a field element into one variable; one fewer variable."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        if value.ctx != self.ctx:
            raise ContextMismatch("substituted value from a different context")
        out = {}
        for exps, coeff in self.terms.items():
            c = coeff * value ** exps[index] if exps[index] else coeff
            rest = exps[:index] + exps[index + 1 :]
            acc = out.get(rest)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(rest, None)
            else:
                out[rest] = acc
        return SparsePoly(self.ctx, self.nvars - 1, out)

    def partial(self, index):
        """Formal partial derivative; char-p annihilation applies."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            c = coeff * e  # exponent reduced mod p by element arithmetic
            if c.is_zero():
                continue
            new = exps[:index] + (e - 1,) + exps[index + 1 :]
            out[new] = c
        return SparsePoly(self.ctx, self.nvars, out)

    def leading_form(self):
        """The top homogeneous part (terms of maximal total degree)."""
        if not self.terms:
            return self
        d = self.total_degree
        return SparsePoly(
            self.ctx,
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e) == d},
        )

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, self.nvars, tuple(self.sorted_terms())))

    def render(self, names=None):
        """Canonical text in the expression grammar; reparses to self."""
        if names is None:
            names = _DEFAULT_NAMES[: self.nvars]
        if len(names) != self.nvars:
            raise ValueError(f"need {self.nvars} variable names")
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = repr(coeff)
            if not factors:
                parts.append(cs)
            elif coeff == self.ctx.one():
                parts.append("*".join(factors))
            else:
                if "+" in cs:
                    cs = f"({cs})"
                parts.append("*".join([cs] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


def bipoly_eval(f, x, y):
    """Evaluate a bivariate polynomial at a point."""
    return f.evaluate((x, y))


def partial_derivative(f, var):
    """Formal partial derivative; var is an index or a default name."""
    if isinstance(var, str):
        try:
            var = _DEFAULT_NAMES[: f.nvars].index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None
    return f.partial(var)


# ---------------------------------------------------------------------------
# Parser.


_OPS = set("+-*^()")


def _tokenize(text, names):
    allowed = set(names) | {"g"}
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(("int", int(text[start:i]), start))
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isalpha():
            if ch in allowed:
                tokens.append(("name", ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, ctx, names):
        self.ctx = ctx
        self.names = tuple(names)
        self.tokens = _tokenize(text, self.names)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        poly = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r} after expression", pos)
        return poly

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        node = self.term()
        if negate:
            node = -node
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                what = "end of input" if kind == "end" else repr(value)
                raise ParseError(f"expected integer exponent after '^', got {what}", pos)
            node = node**value
        return node

    def atom(self):
        kind, value, pos = self.take()
        nvars = len(self.names)
        if kind == "int":
            return SparsePoly.constant(self.ctx, value, nvars)
        if kind == "name":
            if value == "g":
                if self.ctx.k == 1:
                    raise ParseError(
                        "generator 'g' needs an extension field (k >= 2)", pos
                    )
                return SparsePoly.constant(self.ctx, self.ctx.gen(), nvars)
            return SparsePoly.variable(self.ctx, self.names.index(value), nvars)
        if kind == "(":
            node = self.expr()
            kind, value, pos = self.take()
            if kind != ")":
                what = "end of input" if kind == "end" else repr(value)
                raise ParseError(f"expected ')', got {what}", pos)
            return node
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected a value, got {what}", pos)


def parse_poly(text, ctx, names=("x", "y")):
    """Parse an expression in the grammar into a SparsePoly."""
    if not isinstance(text, str):
        raise TypeError("expected an expression string")
    return _Parser(text, ctx, names).parse()


def parse_bipoly(text, ctx):
    """Parse a curve-defining polynomial in x and y."""
    return parse_poly(text, ctx, ("x", "y"))
