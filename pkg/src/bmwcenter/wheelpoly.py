"""Symmetric wheel Laurent polynomials in x_1 ... x_n.

The elementary generators w_k are the T^k coefficients of
prod(1 - x_i^{-1} T) / prod(1 - x_i T); p_k^- = sum(x_i^k - x_i^{-k}) are
the signed power sums.  Both are computed by truncated series expansion
(numerator polynomial times geometric expansions of the denominator), never
by rational-function normalization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ResourceLimit
from .scalars import LaurentQT, Regime


class MultiLaurent:
    """Sparse Laurent polynomial in n variables over exact rationals.

    Terms map exponent tuples (length n, integers) to nonzero Fractions.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = Fraction(v)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def variable(cls, n, i, power=1):
        exps = [0] * n
        exps[i] = power
        return cls(n, {tuple(exps): Fraction(1)})

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultiLaurent) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = MultiLaurent(self.n)
        r.terms = out
        return r

    def __neg__(self):
        r = MultiLaurent(self.n)
        r.terms = {k: -v for k, v in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiLaurent(self.n)
            r = MultiLaurent(self.n)
            r.terms = {k: v * other for k, v in self.terms.items()}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(k, 0) + c1 * c2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        r = MultiLaurent(self.n)
        r.terms = out
        return r

    __rmul__ = __mul__

    def swap_variables(self, i, j):
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        r = MultiLaurent(self.n)
        r.terms = out
        return r

    def substitute_inverse(self, src, dst):
        """x_src := x_dst^{-1}: fold the src exponent into dst, negated."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[dst] -= e[src]
            e[src] = 0
            k = tuple(e)
            w = out.get(k, 0) + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = MultiLaurent(self.n)
        r.terms = out
        return r

    def substitute_one(self, i):
        """x_i := 1."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i] = 0
            k = tuple(e)
            w = out.get(k, 0) + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = MultiLaurent(self.n)
        r.terms = out
        return r

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = ["x%d^%d" % (i + 1, p) for i, p in enumerate(e) if p]
            if not mono or abs(c) != 1:
                mono.insert(0, str(abs(c)))
            s = "*".join(mono)
            bits.append(("- " if c < 0 else "+ " if bits else "") + s)
        return " ".join(bits).lstrip("+ ")

    def __repr__(self):
        return "MultiLaurent(n=%d, %s)" % (self.n, self)


def degree_cap(n):
    """Default cap on wheel-series orders; term counts grow quickly."""
    return 4 * n


def _check_cap(n, k):
    if k > degree_cap(n):
        raise ResourceLimit("order %d exceeds cap %d for n=%d"
                            % (k, degree_cap(n), n))


@lru_cache(maxsize=None)
def _wheel_series(n, K):
    """Coefficients w_0 ... w_K of prod(1-x_i^{-1}T)/prod(1-x_iT)."""
    # series with MultiLaurent coefficients, multiplied factor by factor
    coeffs = [MultiLaurent.const(n, 1)] + [MultiLaurent(n) for _ in range(K)]
    for i in range(n):
        xi = MultiLaurent.variable(n, i)
        xi_inv = MultiLaurent.variable(n, i, -1)
        # multiply by (1 - x_i^{-1} T)
        nxt = [coeffs[0]]
        for k in range(1, K + 1):
            nxt.append(coeffs[k] - xi_inv * coeffs[k - 1])
        coeffs = nxt
        # multiply by 1/(1 - x_i T) = sum x_i^k T^k
        nxt = [coeffs[0]]
        for k in range(1, K + 1):
            nxt.append(coeffs[k] + xi * nxt[k - 1])
        coeffs = nxt
    return tuple(coeffs)


def elementary_wheel(n, k) -> MultiLaurent:
    """w_k: the T^k coefficient of the wheel generating function."""
    _check_cap(n, k)
    return _wheel_series(n, k)[k]


def power_sum(n, k) -> MultiLaurent:
    """p_k^- = sum_i (x_i^k - x_i^{-k}); zero for k = 0."""
    out = MultiLaurent(n)
    if k == 0:
        return out
    for i in range(n):
        out = out + MultiLaurent.variable(n, i, k) - MultiLaurent.variable(n, i, -k)
    return out


def inverse_coeffs(n, K):
    """v_0 ... v_K with sum_i w_i v_{k-i} = delta_{k,0}."""
    _check_cap(n, K)
    w = _wheel_series(n, K)
    v = [MultiLaurent.const(n, 1)]
    for k in range(1, K + 1):
        acc = MultiLaurent(n)
        for i in range(1, k + 1):
            acc = acc + w[i] * v[k - i]
        v.append(-acc)
    return v


def newton_check(n, K) -> bool:
    """p_k^- = sum_{j=1}^k j w_j v_{k-j}, exactly, for all 1 <= k <= K."""
    w = _wheel_series(n, K)
    v = inverse_coeffs(n, K)
    for k in range(1, K + 1):
        rhs = MultiLaurent(n)
        for j in range(1, k + 1):
            rhs = rhs + j * (w[j] * v[k - j])
        if rhs != power_sum(n, k):
            return False
    return True


def is_symmetric(p: MultiLaurent) -> bool:
    """Invariance under all adjacent transpositions."""
    return all(p.swap_variables(i, i + 1) == p for i in range(p.n - 1))


def is_wheel(p: MultiLaurent) -> bool:
    """Symmetric and p(x1, x1^{-1}, x3, ...) = p(1, 1, x3, ...)."""
    if not is_symmetric(p):
        return False
    if p.n < 2:
        return True
    lhs = p.substitute_inverse(1, 0)
    rhs = p.substitute_one(0).substitute_one(1)
    return lhs == rhs


def evaluate(p: MultiLaurent, values, r: Regime) -> LaurentQT:
    """Exact substitution of content-value monomials for the variables."""
    if len(values) != p.n:
        raise ValueError("expected %d values, got %d" % (p.n, len(values)))
    monos = [v.monomial() for v in values]
    out = LaurentQT()
    for e, c in p.terms.items():
        term = LaurentQT.const(c)
        for m, power in zip(monos, e):
            if power:
                term = term * m.pow(power)
        out = out + term
    return out
