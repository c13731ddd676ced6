"""Truncated multivariate power series over a pluggable exact coefficient ring.

A series carries an ordered tuple of variable names, one inclusive truncation
order per variable, and a sparse {exponent-tuple: coefficient} map.  Exponents
above their order are silently dropped (that is what truncation means);
negative exponents are allowed so that Laurent expansions in the string
coupling can carry a finite pole.

The coefficient ring is whatever the stored values are: Fraction,
GaussianRational, LaurentU, RationalFunctionU, ... anything with exact
+,-,*,== and a truthiness test for zero.  The ring's unit is carried on the
series (attribute `one`) so functional operations can build constants.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .gaussian import GaussianRational, i_power
from .laurent import RationalFunctionU

_FR_ONE = Fraction(1)


class TruncatedSeries:
    __slots__ = ("variables", "orders", "terms", "one")

    def __init__(self, variables, orders, terms=None, one=_FR_ONE):
        variables = tuple(variables)
        orders = tuple(int(o) for o in orders)
        if len(variables) != len(orders):
            raise ValueError("one truncation order per variable")
        self.variables = variables
        self.orders = orders
        self.one = one
        clean = {}
        if terms:
            for expts, c in terms.items():
                expts = tuple(int(e) for e in expts)
                if len(expts) != len(variables):
                    raise ValueError("exponent tuple length mismatch")
                if any(e > o for e, o in zip(expts, orders)):
                    continue
                if c:
                    clean[expts] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables, orders, one=_FR_ONE):
        return cls(variables, orders, {}, one)

    @classmethod
    def constant(cls, c, variables, orders, one=_FR_ONE):
        z = (0,) * len(tuple(variables))
        return cls(variables, orders, {z: c}, one)

    @classmethod
    def variable(cls, name, variables, orders, one=_FR_ONE):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, orders, {tuple(e): one}, one)

    def zero_like(self):
        return TruncatedSeries(self.variables, self.orders, {}, self.one)

    def const_like(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.one * Fraction(c)
        return TruncatedSeries(self.variables, self.orders, {(0,) * len(self.variables): c}, self.one)

    # -- structure --------------------------------------------------------

    def _idx(self, name: str) -> int:
        return self.variables.index(name)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), None)

    def scalar_coefficient(self, expts):
        """Coefficient at an exact exponent tuple (ring zero if absent)."""
        c = self.terms.get(tuple(expts))
        return c if c is not None else self.one - self.one

    def coefficient(self, name: str, e: int) -> "TruncatedSeries":
        """Sub-series multiplying name^e, with that exponent reset to zero."""
        i = self._idx(name)
        out = {}
        for expts, c in self.terms.items():
            if expts[i] == e:
                key = expts[:i] + (0,) + expts[i + 1:]
                out[key] = c
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    def max_exponent(self, name: str) -> int:
        i = self._idx(name)
        return max((e[i] for e in self.terms), default=0)

    def min_exponent(self, name: str) -> int:
        i = self._idx(name)
        return min((e[i] for e in self.terms), default=0)

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for expts in self.terms for e in expts)

    def truncated(self, orders) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, tuple(orders), self.terms, self.one)

    def map_coefficients(self, f) -> "TruncatedSeries":
        out = {}
        for expts, c in self.terms.items():
            v = f(c)
            if v:
                out[expts] = v
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    def _compatible(self, other: "TruncatedSeries"):
        if self.variables != other.variables or self.orders != other.orders:
            raise ValueError("series frames differ (variables or truncation orders)")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.variables != other.variables:
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        out = {e: -c for e, c in self.terms.items()}
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.const_like(other)
        # a bare ring element acts as a constant
        return self.const_like(self.one * other) if isinstance(other, type(self.one)) else None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by a ring or rational scalar."""
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            if not c:
                return self.zero_like()
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                out[e] = w
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._compatible(other)
            orders = self.orders
            out: dict[tuple, object] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    if any(x > o for x, o in zip(e, orders)):
                        continue
                    p = ca * cb
                    if not p:
                        continue
                    s = out.get(e)
                    s = p if s is None else s + p
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return TruncatedSeries(self.variables, orders, out, self.one)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.const_like(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- functional operations ---------------------------------------------

    def _unit_part(self):
        """Split self = c0 * (1 + w) with w of positive total degree."""
        if self.has_negative_exponents():
            raise ValueError("functional operations need nonnegative exponents")
        c0 = self.constant_term()
        if c0 is None or not c0:
            raise ValueError("constant term must be invertible")
        if c0 == self.one:
            inv = None
        elif isinstance(c0, Fraction):
            inv = 1 / c0
        elif hasattr(c0, "inverse"):
            inv = c0.inverse()
        else:
            raise ValueError("constant term is not invertible in this ring")
        w = self.scale(inv) if inv is not None else self
        return c0, inv, w - w.const_like(1)

    def inverse(self) -> "TruncatedSeries":
        c0, c0inv, w = self._unit_part()
        # 1/(1+w) = sum (-w)^k, finite under truncation
        acc = self.const_like(1)
        term = self.const_like(1)
        while True:
            term = term * (-w)
            if term.is_zero():
                break
            acc = acc + term
        return acc if c0inv is None else acc.scale(c0inv)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return NotImplemented

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1."""
        c0 = self.constant_term()
        if c0 != self.one:
            raise ValueError("log needs constant term 1")
        w = self - self.const_like(1)
        if w.has_negative_exponents():
            raise ValueError("log needs nonnegative exponents")
        acc = self.zero_like()
        term = self.const_like(1)
        k = 0
        while True:
            k += 1
            term = term * w
            if term.is_zero():
                break
            acc = acc + term.scale(Fraction((-1) ** (k - 1), k))
        return acc

    def exp(self) -> "TruncatedSeries":
        """exp of a series with constant term 0."""
        if self.constant_term() is not None:
            raise ValueError("exp needs constant term 0")
        if self.has_negative_exponents():
            raise ValueError("exp needs nonnegative exponents")
        acc = self.const_like(1)
        term = self.const_like(1)
        k = 0
        while True:
            k += 1
            term = term * self
            if term.is_zero():
                break
            acc = acc + term.scale(Fraction(1, factorial(k)))
        return acc

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1 (binomial series)."""
        c0 = self.constant_term()
        if c0 != self.one:
            raise ValueError("sqrt needs constant term 1")
        w = self - self.const_like(1)
        if w.has_negative_exponents():
            raise ValueError("sqrt needs nonnegative exponents")
        acc = self.const_like(1)
        term = self.const_like(1)
        binom = _FR_ONE
        k = 0
        while True:
            k += 1
            binom = binom * (Fraction(1, 2) - (k - 1)) / k
            term = term * w
            if term.is_zero():
                break
            acc = acc + term.scale(binom)
        return acc

    def substitute(self, name: str, replacement: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute a series (same frame) for the named variable."""
        self._compatible(replacement)
        i = self._idx(name)
        by_exp: dict[int, dict] = {}
        for expts, c in self.terms.items():
            e = expts[i]
            key = expts[:i] + (0,) + expts[i + 1:]
            by_exp.setdefault(e, {})[key] = c
        if any(e < 0 for e in by_exp):
            raise ValueError("substitute needs nonnegative exponents in the replaced variable")
        acc = self.zero_like()
        power = self.const_like(1)
        prev = 0
        for e in sorted(by_exp):
            for _ in range(e - prev):
                power = power * replacement
            prev = e
            part = TruncatedSeries(self.variables, self.orders, by_exp[e], self.one)
            acc = acc + part * power
        return acc

    def xdx(self, name: str) -> "TruncatedSeries":
        """The Euler operator x d/dx in the named variable."""
        i = self._idx(name)
        out = {}
        for expts, c in self.terms.items():
            if expts[i]:
                v = c * Fraction(expts[i])
                if v:
                    out[expts] = v
        return TruncatedSeries(self.variables, self.orders, out, self.one)

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for expts in sorted(self.terms):
            mono = " ".join(
                f"{v}^{e}" if e != 1 else v
                for v, e in zip(self.variables, expts)
                if e
            )
            c = self.terms[expts]
            cs = str(c)
            if mono:
                cs = f"({cs})" if (" " in cs or "/" in cs) else cs
                bits.append(f"{cs} {mono}" if cs != "1" else mono)
            else:
                bits.append(cs if " " not in cs else f"({cs})")
        return " + ".join(bits)

    def __repr__(self) -> str:
        frame = ", ".join(f"{v}<={o}" for v, o in zip(self.variables, self.orders))
        return f"<TruncatedSeries [{frame}] {self}>"


# -- named functional forms -------------------------------------------------


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    return s.log()


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    return s.exp()


def series_sqrt(s: TruncatedSeries) -> TruncatedSeries:
    return s.sqrt()


def series_reversion(s: TruncatedSeries, name: str | None = None) -> TruncatedSeries:
    """Compositional inverse in the named (default: first) variable.

    Needs zero constant term, an invertible linear coefficient, and every term
    divisible by the variable.  Uses the Lagrange formula
        [v^n] t = (1/n) [v^{n-1}] (v / s)^n.
    """
    name = name or s.variables[0]
    i = s._idx(name)
    N = s.orders[i]
    zkey = (0,) * len(s.variables)
    if zkey in s.terms:
        raise ValueError("reversion needs zero constant term")
    if any(e[i] < 1 for e in s.terms):
        raise ValueError("reversion needs every term divisible by the variable")
    shifted = {}
    for expts, c in s.terms.items():
        key = expts[:i] + (expts[i] - 1,) + expts[i + 1:]
        shifted[key] = c
    g = TruncatedSeries(s.variables, s.orders, shifted, s.one)  # s / v
    c1 = g.constant_term()
    if c1 is None or not c1:
        raise ValueError("reversion needs an invertible linear coefficient")
    r = g.inverse()  # v / s
    out = s.zero_like()
    rpow = s.const_like(1)
    for n in range(1, N + 1):
        rpow = rpow * r
        coeff = rpow.coefficient(name, n - 1).scale(Fraction(1, n))
        shifted_up = {}
        for expts, c in coeff.terms.items():
            key = expts[:i] + (n,) + expts[i + 1:]
            shifted_up[key] = c
        out = out + TruncatedSeries(s.variables, s.orders, shifted_up, s.one)
    return out


# -- expansion in the string coupling ----------------------------------------

LAMBDA = "lambda"


def _laurent_lambda_series(p, order: int) -> list[GaussianRational]:
    """Coefficients of p(u -> exp(i*lam/2)) up to lam^order (dense list)."""
    out = [GaussianRational(0) for _ in range(order + 1)]
    for e, c in p.terms.items():
        # exp(i e lam / 2): lam^k coefficient is (i e / 2)^k / k!
        base = Fraction(e, 2)
        pw = Fraction(1)
        for k in range(order + 1):
            out[k] = out[k] + i_power(k) * (c * pw / factorial(k))
            pw *= base
    return out


def lambda_expand(f: RationalFunctionU, order: int) -> TruncatedSeries:
    """Expand a bracket-ring value under u = exp(i*lam/2) as a Laurent series.

    Returns a TruncatedSeries in `lambda` over GaussianRational with exponents
    from -(pole order) up to `order`.  The denominator's vanishing order at
    lam = 0 is at most its number of terms minus one, which bounds the search.
    """
    if f.num.is_zero():
        return TruncatedSeries((LAMBDA,), (order,), {}, GaussianRational(1))
    den = f.den
    margin = len(den.terms)  # vanishing order is < number of terms
    work = max(order, 0) + margin
    den_series = _laurent_lambda_series(den, work)
    v = next((k for k, c in enumerate(den_series) if c), None)
    if v is None:
        raise ArithmeticError("denominator expansion vanished to its theoretical bound")
    work = max(order + v, 0)
    num_series = _laurent_lambda_series(f.num, work)
    den_series = _laurent_lambda_series(den, work + v)[v:]
    # divide num_series by the unit part of the denominator
    d0 = den_series[0]
    quot: list[GaussianRational] = []
    for m in range(work + 1):
        acc = num_series[m]
        for k in range(1, min(m, len(den_series) - 1) + 1):
            acc = acc - den_series[k] * quot[m - k]
        quot.append(acc / d0)
    terms = {}
    for m, c in enumerate(quot):
        e = m - v
        if e <= order and c:
            terms[(e,)] = c
    return TruncatedSeries((LAMBDA,), (order,), terms, GaussianRational(1))
