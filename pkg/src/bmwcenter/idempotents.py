"""Spectrum-level primitive idempotents in the generic regime.

The recursive interpolation product is evaluated on the eigenvalue data of
every updown path; the resulting diagonal selects exactly the drunk path of
its shape.  Interpolation nodes at each level are the distinct branching
contents out of the drunk path's previous shape, so no denominator can
vanish while q and t stay independent.
"""

from __future__ import annotations

from .errors import RegimeMismatch, ZeroDenominator
from .partitions import Partition, boundary_boxes
from .scalars import ADD, REMOVE, Content, GENERIC, LaurentQT, Regime, content_value
from .tableaux import (content_sequence, drunk_path, enumerate_lambda,
                       enumerate_paths)


def extension_contents(mu: Partition, r: Regime = GENERIC):
    """Distinct content values labeling branching edges out of mu."""
    removable, addable = boundary_boxes(mu)
    out = set()
    for (i, j) in addable:
        out.add(content_value(Content(ADD, j - i), r))
    for (i, j) in removable:
        out.add(content_value(Content(REMOVE, j - i), r))
    return out


class SpectralDiagonal:
    """Values of one idempotent on every updown path at its level."""

    __slots__ = ("n", "shape", "values")

    def __init__(self, n, shape, values):
        self.n = n
        self.shape = shape
        self.values = values

    def selected(self):
        return [t for t, v in self.values.items() if v == 1]


def spectral_idempotent(n, lam: Partition, r: Regime = GENERIC) -> SpectralDiagonal:
    """Diagonal of e_{lam,n} on all paths of all shapes at level n."""
    if not r.is_generic:
        raise RegimeMismatch("idempotent evaluation is generic-regime only")
    drunk = drunk_path(n, lam)
    drunk_values = [content_value(c, r) for c in content_sequence(drunk)]
    # interpolation data per level: (nodes to kill, target content)
    levels = []
    for k in range(1, n + 1):
        target = drunk_values[k - 1]
        nodes = extension_contents(drunk[k - 1], r) - {target}
        for c in nodes:
            if c == target:
                raise ZeroDenominator("colliding contents out of %s" % drunk[k - 1])
        levels.append((target, sorted(nodes)))

    values = {}
    for lp in enumerate_lambda(n):
        for path in enumerate_paths(n, lp.shape):
            path_values = [content_value(c, r) for c in content_sequence(path)]
            num = LaurentQT.const(1)
            den = LaurentQT.const(1)
            zero = False
            for k in range(1, n + 1):
                target, nodes = levels[k - 1]
                x = path_values[k - 1]
                for c in nodes:
                    if x == c:
                        zero = True
                        break
                    num = num * (x.monomial() - c.monomial())
                    den = den * (target.monomial() - c.monomial())
                if zero:
                    break
            if zero:
                values[path] = 0
            else:
                # a surviving path must evaluate to exactly 1
                if num != den:
                    raise ZeroDenominator(
                        "interpolation on %r is neither 0 nor 1" % path)
                values[path] = 1
    return SpectralDiagonal(n, lam, values)


def orthogonality_check(n, r: Regime = GENERIC) -> bool:
    """Each diagonal selects one path and distinct diagonals never overlap."""
    diagonals = [spectral_idempotent(n, lp.shape, r) for lp in enumerate_lambda(n)]
    drunk_set = set()
    for d in diagonals:
        sel = d.selected()
        if len(sel) != 1 or sel[0] != drunk_path(n, d.shape):
            return False
        drunk_set.add(sel[0])
    for a in range(len(diagonals)):
        for b in range(a + 1, len(diagonals)):
            for path, va in diagonals[a].values.items():
                if va and diagonals[b].values.get(path):
                    return False
    # the pointwise sum over all diagonals is the drunk-path indicator
    for path in diagonals[0].values:
        total = sum(d.values[path] for d in diagonals)
        if total != (1 if path in drunk_set else 0):
            return False
    return True
