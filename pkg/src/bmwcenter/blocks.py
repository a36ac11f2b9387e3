"""Semisimplicity, admissibility and the block structure of Lambda_n.

Works over power regimes t = eps * q^N with q transcendental, so all
root-of-unity side conditions of the semisimplicity criterion hold
vacuously and membership tests reduce to comparing (sign, exponent) pairs.
"""

from __future__ import annotations

from .center import separation_classes
from .contentfn import signature, signature_equal
from .errors import LevelMismatch, RegimeMismatch
from .partitions import Partition, intersection, skew_datum
from .scalars import ADD, Content, Regime, content_value
from .tableaux import LabeledPartition, enumerate_lambda


def is_semisimple(n, r: Regime) -> bool:
    """Semisimplicity of the level-n algebra in the given regime."""
    if r.is_generic or n == 1:
        return True
    eps, N = r.sign, r.exponent
    if (eps, N) in ((1, -1), (-1, 1)):  # t = q^-1 or t = -q
        return n in (3, 5)
    if n == 2:
        return True
    for k in range(3, n + 1):
        if (eps, N) in ((1, -(2 * k - 3)), (-1, 2 * k - 3)):
            return False
        if N in (3 - k, k - 3):
            return False
    return True


def check_admissible(lam: Partition, f, mu: Partition, r: Regime):
    """Conditions failed by the pair, empty when lam is (f, mu)-admissible.

    (1) mu contained in lam with |lam/mu| = 2f; (2) every skew diagonal is
    value-paired with some skew diagonal of equal multiplicity; (3)/(4)
    parity constraints when a skew content equals q or -q^-1 and pairs with
    its neighbour.
    """
    if r.is_generic:
        raise RegimeMismatch("admissibility needs a power regime")
    failed = []
    if not lam.contains(mu) or lam.size - mu.size != 2 * f or f < 0:
        return [1]
    if lam == mu:
        return []
    sd = skew_datum(lam, mu)
    value = {i: content_value(Content(ADD, i), r) for i in sd.diagonals()}
    for i in sd.diagonals():
        if not any((value[i] * value[j]).is_identity
                   and sd.multiplicity(i) == sd.multiplicity(j)
                   for j in sd.diagonals()):
            if 2 not in failed:
                failed.append(2)
    q_value = (1, 1)  # content equal to q, as (sign, exponent)
    minus_qinv = (-1, -1)
    for i in sd.diagonals():
        v = value[i]
        if ((v.a, v.b) == q_value and (value[i] * value.get(i - 1, v)).is_identity
                and sd.multiplicity(i - 1) and sd.multiplicity(i) % 2):
            failed.append(3)
        if ((v.a, v.b) == minus_qinv and (value[i] * value.get(i + 1, v)).is_identity
                and sd.multiplicity(i + 1) and sd.multiplicity(i) % 2):
            failed.append(4)
    return failed


def is_admissible(lam: Partition, f, mu: Partition, r: Regime) -> bool:
    return not check_admissible(lam, f, mu, r)


def block_equivalent(a: LabeledPartition, b: LabeledPartition, r: Regime) -> bool:
    """Both shapes admissible over their intersection with integral defects."""
    if a.level != b.level:
        raise LevelMismatch("levels %d and %d differ" % (a.level, b.level))
    if r.is_generic:
        return a == b
    lam, mu = a.shape, b.shape
    cap = intersection(lam, mu)
    if (lam.size - cap.size) % 2 or (mu.size - cap.size) % 2:
        return False
    l1 = (lam.size - cap.size) // 2
    l2 = (mu.size - cap.size) // 2
    return (is_admissible(lam, l1, cap, r) and is_admissible(mu, l2, cap, r))


class BlockReport:
    __slots__ = ("n", "regime", "blocks", "agrees_with_W", "closure_pairs")

    def __init__(self, n, regime, blocks, agrees_with_W, closure_pairs):
        self.n = n
        self.regime = regime
        self.blocks = blocks
        self.agrees_with_W = agrees_with_W
        # pairs related only through transitive closure, not directly
        self.closure_pairs = closure_pairs


def block_partition(n, r: Regime) -> BlockReport:
    """Classes of Lambda_n under the closure of pairwise block equivalence."""
    lps = enumerate_lambda(n)
    parent = list(range(len(lps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    direct = set()
    for i in range(len(lps)):
        for j in range(i + 1, len(lps)):
            if block_equivalent(lps[i], lps[j], r):
                direct.add((i, j))
                parent[find(i)] = find(j)
    groups = {}
    for i, lp in enumerate(lps):
        groups.setdefault(find(i), []).append(lp)
    blocks = sorted((sorted(g, key=lambda lp: lp.sort_key()) for g in groups.values()),
                    key=lambda c: c[0].sort_key())
    closure_pairs = []
    for i in range(len(lps)):
        for j in range(i + 1, len(lps)):
            if find(i) == find(j) and (i, j) not in direct:
                closure_pairs.append((lps[i], lps[j]))
    w_classes = [[lp for lp in c] for c in separation_classes(n, r).classes]
    agrees = {frozenset(c) for c in blocks} == {frozenset(c) for c in w_classes}
    return BlockReport(n, r, blocks, agrees, closure_pairs)


def verify_block_theorem(n, r: Regime) -> bool:
    """Block classes coincide with signature classes.

    Only stated for even-power regimes where the algebra fails to be
    semisimple; other inputs are rejected.
    """
    if not r.is_even_power:
        raise RegimeMismatch("block theorem needs an even-power regime")
    if is_semisimple(n, r):
        raise RegimeMismatch("level %d is semisimple in regime %s" % (n, r))
    return block_partition(n, r).agrees_with_W
