"""Content multisets of drunk paths and reduced wheel signatures.

W(lambda, t) = prod(1 - c^-1 T) / prod(1 - c T) over the drunk content
multiset.  We store only the reduced exponent function e(v), where e(v) is
the net exponent of (1 - vT) in the numerator; equal inverse pairs and
self-inverse values cancel, which is exactly rational-function reduction
because q is never a root of unity.
"""

from __future__ import annotations

from collections import Counter

from .errors import RegimeMismatch, ShapeLevelMismatch
from .partitions import Partition, diagonal_datum, skew_datum
from .scalars import (ADD, Content, ContentValue, Regime, content_value,
                      expand_W_series)
from .tableaux import drunk_path, content_sequence, labeled
from .wheelpoly import elementary_wheel, evaluate


class WheelSignature:
    """Reduced exponent function of a wheel rational function.

    ``exponents`` maps ContentValue v to the net numerator exponent of the
    factor (1 - vT); zero entries are dropped and self-inverse values never
    appear, so e(v^-1) = -e(v) always.
    """

    __slots__ = ("kind", "exponents")

    def __init__(self, kind, exponents):
        self.kind = kind
        self.exponents = {v: e for v, e in exponents.items() if e}

    @property
    def is_trivial(self):
        return not self.exponents

    def __eq__(self, other):
        return (isinstance(other, WheelSignature) and self.kind == other.kind
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.kind, frozenset(self.exponents.items())))

    def sorted_entries(self):
        return sorted(self.exponents.items(), key=lambda kv: (kv[0].a, kv[0].b))

    def merge(self, other):
        """Signature of the product of the two rational functions."""
        if self.kind != other.kind:
            raise RegimeMismatch("cannot merge signatures of different regimes")
        out = dict(self.exponents)
        for v, e in other.exponents.items():
            w = out.get(v, 0) + e
            if w:
                out[v] = w
            else:
                out.pop(v, None)
        return WheelSignature(self.kind, out)

    def __str__(self):
        if self.is_trivial:
            return "1"
        num, den = [], []
        for v, e in self.sorted_entries():
            factor = "(1-%sT)" % v
            if abs(e) > 1:
                factor += "^%d" % abs(e)
            (num if e > 0 else den).append(factor)
        top = "".join(num) or "1"
        if not den:
            return top
        return "%s/%s" % (top, "".join(den))

    def __repr__(self):
        return "WheelSignature(%s)" % self


def reduce_values(values, kind) -> WheelSignature:
    """Signature of prod(1 - v^-1 T)/prod(1 - v T) over a value multiset."""
    mult = Counter(values)
    exps = {}
    for v in list(mult) + [v.inverse() for v in mult]:
        if v in exps or v == v.inverse():
            continue
        e = mult.get(v.inverse(), 0) - mult.get(v, 0)
        if e:
            exps[v] = e
    return WheelSignature(kind, exps)


def drunk_contents(n, lam: Partition):
    """Content multiset of the drunk path, in closed form.

    t appears with multiplicity f + m(0), t^-1 with multiplicity f, and
    t q^{2i} with multiplicity m(i) for each other diagonal of lam.
    """
    lp = labeled(n, lam)
    dd = diagonal_datum(lam)
    out = Counter()
    out[Content(ADD, 0)] = lp.defect + dd.multiplicity(0)
    out[Content(-ADD, 0)] = lp.defect
    for i in dd.diagonals():
        if i != 0 and dd.multiplicity(i):
            out[Content(ADD, i)] = dd.multiplicity(i)
    return +out


def drunk_content_values(n, lam: Partition, r: Regime):
    """The drunk multiset as a flat list of regime values."""
    out = []
    for c, m in sorted(drunk_contents(n, lam).items(),
                       key=lambda cm: (cm[0].s, cm[0].i)):
        out.extend([content_value(c, r)] * m)
    return out


def signature(n, lam: Partition, r: Regime) -> WheelSignature:
    """Reduced signature of W(lam, t) at level n."""
    return reduce_values(drunk_content_values(n, lam, r), r.kind)


def signature_equal(a: WheelSignature, b: WheelSignature) -> bool:
    if a.kind != b.kind:
        raise RegimeMismatch("signatures come from different regimes")
    return a == b


def skew_signature(lam: Partition, mu: Partition, r: Regime) -> WheelSignature:
    """Signature of W(lam/mu, t): contents (Add, i) with skew multiplicities."""
    sd = skew_datum(lam, mu)
    values = []
    for i, m in sd.mult:
        values.extend([content_value(Content(ADD, i), r)] * m)
    return reduce_values(values, r.kind)


def multiplicativity_check(lam: Partition, mu: Partition, r: Regime) -> bool:
    """W(lam,t) = W(mu,t) * W(lam/mu,t) at the reduced level."""
    lhs = signature(lam.size, lam, r)
    rhs = signature(mu.size, mu, r).merge(skew_signature(lam, mu, r))
    return lhs == rhs


class PairingSet:
    """Diagonals of a shape whose content values pair off to 1.

    ``mates`` maps each paired diagonal to the sorted tuple of its partners
    (a self-paired diagonal is its own partner).
    """

    __slots__ = ("paired", "mates")

    def __init__(self, paired, mates=None):
        self.paired = frozenset(paired)
        self.mates = dict(mates) if mates else {}

    def __eq__(self, other):
        return isinstance(other, PairingSet) and self.paired == other.paired

    def __contains__(self, i):
        return i in self.paired

    def __iter__(self):
        return iter(sorted(self.paired))

    def __str__(self):
        return "{%s}" % ", ".join(str(i) for i in self)


def pairing_set(n, lam: Partition, r: Regime) -> PairingSet:
    """All diagonals i of lam admitting j with c(i) c(j) = 1."""
    if not r.is_even_power:
        raise RegimeMismatch("pairing needs an even-power regime, got %s" % r)
    labeled(n, lam)
    dd = diagonal_datum(lam)
    diags = [i for i in dd.diagonals() if dd.multiplicity(i)]
    vals = {i: content_value(Content(ADD, i), r) for i in diags}
    mates = {}
    for i in diags:
        partners = tuple(sorted(j for j in diags
                                if (vals[i] * vals[j]).is_identity))
        if partners:
            mates[i] = partners
    return PairingSet(set(mates), mates)


def series_consistency(n, lam: Partition, r: Regime, K) -> bool:
    """The W-series coefficients agree with direct wheel evaluations.

    Coefficient of T^k in the expanded W series must equal w_k evaluated on
    the drunk content multiset, for all k <= K.
    """
    values = drunk_content_values(n, lam, r)
    series = expand_W_series(values, K)
    for k in range(K + 1):
        if series[k] != evaluate(elementary_wheel(n, k), values, r):
            return False
    return True


def signature_json(sig: WheelSignature):
    return [{"value": str(v), "exponent": e} for v, e in sig.sorted_entries()]
