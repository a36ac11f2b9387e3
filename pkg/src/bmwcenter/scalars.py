"""Parameter regimes and exact scalar arithmetic.

A regime is either generic (q, t algebraically independent, q not a root of
unity) or a power specialization t = eps * q^N with q transcendental.
Root-of-unity parameters are unrepresentable by construction.

Content values live in the group {+-1} x Z (power regimes, sigma * q^m) or
in the free abelian group on t and q^2 (generic).  LaurentQT is a sparse
exact Laurent polynomial in q and t over rationals; SeriesT a truncated
power series in T with LaurentQT coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RegimeMismatch


# ---------------------------------------------------------------------------
# regimes


@dataclass(frozen=True)
class Regime:
    """Generic, or t = sign * q^exponent."""

    kind: str  # "generic" | "power"
    sign: int = 0
    exponent: int = 0

    def __post_init__(self):
        if self.kind == "power" and self.sign not in (1, -1):
            raise ValueError("power regime sign must be +-1")

    @property
    def is_generic(self):
        return self.kind == "generic"

    @property
    def is_power(self):
        return self.kind == "power"

    @property
    def is_even_power(self):
        return self.is_power and self.exponent % 2 == 0

    def __str__(self):
        if self.is_generic:
            return "generic"
        return "%sq^%d" % ("-" if self.sign < 0 else "", self.exponent)


GENERIC = Regime("generic")


def power_regime(sign, exponent):
    return Regime("power", sign, exponent)


def regime_from_text(text):
    """Parse "generic" | "q^N" | "-q^N" | "1"."""
    text = text.strip()
    if text == "generic":
        return GENERIC
    if text == "1":
        return power_regime(1, 0)
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    if not text.startswith("q^"):
        raise ValueError("bad regime spec %r" % text)
    return power_regime(sign, int(text[2:]))


# ---------------------------------------------------------------------------
# contents and their values

ADD = 1
REMOVE = -1


@dataclass(frozen=True)
class Content:
    """One updown step: (t q^{2i})^s with s = +1 for add, -1 for remove."""

    s: int  # ADD or REMOVE
    i: int  # diagonal of the moved box

    def inverse(self):
        return Content(-self.s, self.i)

    def __str__(self):
        return "(%s, %d)" % ("add" if self.s == ADD else "remove", self.i)


@dataclass(frozen=True, order=True)
class ContentValue:
    """Exact value of a content in a regime.

    Power regime: (sign, m) denoting sign * q^m.  Generic: (t_exp, q_exp)
    denoting t^{t_exp} q^{q_exp}; sign is fixed to +1 there.
    """

    kind: str
    a: int  # power: sign in {+1,-1}; generic: exponent of t
    b: int  # power: exponent of q; generic: exponent of q

    def __mul__(self, other):
        if self.kind != other.kind:
            raise RegimeMismatch("cannot multiply values of different regimes")
        if self.kind == "power":
            return ContentValue("power", self.a * other.a, self.b + other.b)
        return ContentValue("generic", self.a + other.a, self.b + other.b)

    def inverse(self):
        if self.kind == "power":
            return ContentValue("power", self.a, -self.b)
        return ContentValue("generic", -self.a, -self.b)

    @property
    def is_identity(self):
        if self.kind == "power":
            return self.a == 1 and self.b == 0
        return self.a == 0 and self.b == 0

    def monomial(self):
        """The value as a LaurentQT monomial."""
        if self.kind == "power":
            return LaurentQT({(self.b, 0): Fraction(self.a)})
        return LaurentQT({(self.b, self.a): Fraction(1)})

    def __str__(self):
        if self.kind == "power":
            return "%sq^%d" % ("-" if self.a < 0 else "", self.b)
        return "t^%d*q^%d" % (self.a, self.b)


def content_value(c: Content, r: Regime) -> ContentValue:
    """Value of (t q^{2i})^s in the regime."""
    if r.is_generic:
        return ContentValue("generic", c.s, 2 * c.i * c.s)
    # t = eps q^N: (t q^{2i})^s = eps^s q^{s(N+2i)}; eps^s = eps for eps = +-1
    return ContentValue("power", r.sign, c.s * (r.exponent + 2 * c.i))


def value_from_text(text, r: Regime) -> ContentValue:
    text = text.strip()
    if r.is_power:
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:]
        if not text.startswith("q^"):
            raise ValueError("bad value text %r" % text)
        return ContentValue("power", sign, int(text[2:]))
    left, right = text.split("*")
    return ContentValue("generic", int(left[2:]), int(right[2:]))


# ---------------------------------------------------------------------------
# sparse Laurent polynomials in q, t


class LaurentQT:
    """Sparse Laurent polynomial sum c_{ab} q^a t^b with exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = Fraction(v)

    @classmethod
    def const(cls, c):
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, qexp, texp=0, coeff=1):
        return cls({(qexp, texp): Fraction(coeff)})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = LaurentQT()
        r.terms = out
        return r

    def __neg__(self):
        r = LaurentQT()
        r.terms = {k: -v for k, v in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentQT()
            r = LaurentQT()
            r.terms = {k: v * other for k, v in self.terms.items()}
            return r
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                w = out.get(k, 0) + c1 * c2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        r = LaurentQT()
        r.terms = out
        return r

    __rmul__ = __mul__

    def is_monomial(self):
        return len(self.terms) == 1

    def monomial_inverse(self):
        ((a, b), c), = self.terms.items()
        return LaurentQT({(-a, -b): 1 / c})

    def pow(self, k):
        if k < 0:
            return self.monomial_inverse().pow(-k)
        out = LaurentQT.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in self.sorted_terms():
            mono = []
            if a:
                mono.append("q^%d" % a)
            if b:
                mono.append("t^%d" % b)
            if not mono or abs(c) != 1:
                mono.insert(0, str(abs(c)))
            s = "*".join(mono)
            bits.append(("- " if c < 0 else "+ " if bits else "") + s)
        return " ".join(bits).lstrip("+ ")

    def __repr__(self):
        return "LaurentQT(%s)" % self


def quantum_integer(N: int) -> LaurentQT:
    """[N]_q = (q^N - q^-N)/(q - q^-1), antisymmetric in N."""
    if N == 0:
        return LaurentQT()
    if N < 0:
        return -quantum_integer(-N)
    return LaurentQT({(e, 0): Fraction(1) for e in range(N - 1, -N - 1, -2)})


def delta(r: Regime):
    """The loop value (t - t^-1)/(q - q^-1) + 1.

    Power regimes evaluate exactly to [sign*N]_q + 1.  Generic returns the
    unevaluated (numerator, denominator) pair of Laurent polynomials.
    """
    if r.is_power:
        return quantum_integer(r.sign * r.exponent) + LaurentQT.const(1)
    num = (LaurentQT.monomial(0, 1) - LaurentQT.monomial(0, -1)
           + LaurentQT.monomial(1) - LaurentQT.monomial(-1))
    den = LaurentQT.monomial(1) - LaurentQT.monomial(-1)
    return num, den


# ---------------------------------------------------------------------------
# truncated power series in T


class SeriesT:
    """Power series in T truncated at order K, LaurentQT coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        self.order = order
        self.coeffs = list(coeffs) if coeffs is not None else []
        while len(self.coeffs) < order + 1:
            self.coeffs.append(LaurentQT())
        del self.coeffs[order + 1:]

    @classmethod
    def one(cls, order):
        return cls(order, [LaurentQT.const(1)])

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        K = min(self.order, other.order)
        return SeriesT(K, [self.coeffs[k] + other.coeffs[k] for k in range(K + 1)])

    def __mul__(self, other):
        K = min(self.order, other.order)
        out = [LaurentQT() for _ in range(K + 1)]
        for i, ci in enumerate(self.coeffs[:K + 1]):
            if ci.is_zero:
                continue
            for j in range(K + 1 - i):
                cj = other.coeffs[j]
                if not cj.is_zero:
                    out[i + j] = out[i + j] + ci * cj
        return SeriesT(K, out)

    def inverse(self):
        """Reciprocal series; the constant term must be a monomial."""
        c0 = self.coeffs[0]
        if not c0.is_monomial():
            raise ValueError("series constant term is not invertible exactly")
        inv0 = c0.monomial_inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = LaurentQT()
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(inv0 * acc))
        return SeriesT(self.order, out)


def geometric(value: ContentValue, order: int) -> SeriesT:
    """1/(1 - v T) truncated: coefficients v^k."""
    m = value.monomial()
    coeffs = [LaurentQT.const(1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * m)
    return SeriesT(order, coeffs)


def linear_factor(value: ContentValue, order: int) -> SeriesT:
    """1 - v T truncated."""
    coeffs = [LaurentQT.const(1), -value.monomial()]
    return SeriesT(order, coeffs)


def expand_W_series(values, order: int) -> SeriesT:
    """prod (1 - v^-1 T) / prod (1 - v T), truncated at the given order.

    ``values`` is an iterable of ContentValue (a multiset; repeats allowed).
    """
    out = SeriesT.one(order)
    for v in values:
        out = out * linear_factor(v.inverse(), order)
        out = out * geometric(v, order)
    return out
