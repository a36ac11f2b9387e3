"""Separation of Lambda_n by wheel signatures.

Provides the signature class decomposition, the closed-form classification
predicate for when the wheel evaluations separate all of Lambda_n, exact
evaluation matrices of the elementary wheel family with fraction-free rank,
and constructive unitriangular separating families.
"""

from __future__ import annotations

from fractions import Fraction

from .contentfn import drunk_content_values, signature
from .errors import ResourceLimit
from .scalars import LaurentQT, Regime, expand_W_series
from .tableaux import enumerate_lambda


class SeparationReport:
    """Signature classes of Lambda_n in one regime."""

    __slots__ = ("n", "regime", "classes", "witnesses")

    def __init__(self, n, regime, classes, witnesses):
        self.n = n
        self.regime = regime
        self.classes = classes
        self.witnesses = witnesses

    @property
    def separates(self):
        return all(len(c) == 1 for c in self.classes)

    def class_of(self, lp):
        for c in self.classes:
            if lp in c:
                return c
        raise KeyError(lp)


def separation_classes(n, r: Regime) -> SeparationReport:
    """Partition Lambda_n by equality of reduced wheel signatures."""
    groups = {}
    for lp in enumerate_lambda(n):
        sig = signature(n, lp.shape, r)
        groups.setdefault(sig, []).append(lp)
    classes = sorted((sorted(g, key=lambda lp: lp.sort_key()) for g in groups.values()),
                     key=lambda c: c[0].sort_key())
    witnesses = []
    for c in classes:
        for i in range(len(c)):
            for j in range(i + 1, len(c)):
                witnesses.append((c[i], c[j]))
    return SeparationReport(n, r, classes, witnesses)


def theorem1_predicate(n, r: Regime) -> bool:
    """Whether the wheel evaluations separate all of Lambda_n.

    True for the generic regime; for t = +-q^N with N even, true when
    |N| >= 2n or the algebra is semisimple; with N odd, true only for
    |N| >= 2n - 1 and for the n = 3, |N| = 1 exceptions.  Symmetric in N
    (inverting q swaps the regimes +-q^N and +-q^-N and conjugates shapes).
    """
    if r.is_generic:
        return True
    N = r.exponent
    if N % 2 == 0:
        from .blocks import is_semisimple
        return abs(N) >= 2 * n or is_semisimple(n, r)
    if abs(N) >= 2 * n - 1:
        return True
    return n == 3 and abs(N) == 1


# ---------------------------------------------------------------------------
# exact linear algebra over LaurentQT


def _shifted(p: LaurentQT):
    qs = [a for a, _ in p.terms]
    ts = [b for _, b in p.terms]
    q0, t0 = min(qs), min(ts)
    return {(a - q0, b - t0): c for (a, b), c in p.terms.items()}


def divexact(a: LaurentQT, b: LaurentQT):
    """Exact quotient a / b, or None when b does not divide a."""
    if a.is_zero:
        return LaurentQT()
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_monomial():
        return a * b.monomial_inverse()
    # normalize away the Laurent shifts, remembering the net monomial
    qa = min(x for x, _ in a.terms)
    ta = min(y for _, y in a.terms)
    qb = min(x for x, _ in b.terms)
    tb = min(y for _, y in b.terms)
    ra = _shifted(a)
    rb = _shifted(b)
    lb = max(rb)
    cb = rb[lb]
    quot = {}
    while ra:
        la = max(ra)
        da, db = la[0] - lb[0], la[1] - lb[1]
        if da < 0 or db < 0:
            return None
        coeff = ra[la] / cb
        quot[(da, db)] = coeff
        for e, c in rb.items():
            k = (e[0] + da, e[1] + db)
            w = ra.get(k, 0) - coeff * c
            if w:
                ra[k] = w
            else:
                ra.pop(k, None)
    out = LaurentQT()
    out.terms = {(x + qa - qb, y + ta - tb): c for (x, y), c in quot.items()}
    return out


def bareiss_rank(matrix, early_stop=None):
    """Rank of a LaurentQT matrix by fraction-free elimination.

    Full pivoting with the sparsest available pivot; intermediate entries
    stay polynomial because each elimination step divides exactly by the
    previous pivot.
    """
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = LaurentQT.const(1)
    rank = 0
    while rank < min(nrows, ncols):
        best = None
        for i in range(rank, nrows):
            for j in range(rank, ncols):
                if not m[i][j].is_zero:
                    if best is None or len(m[i][j].terms) < len(m[best[0]][best[1]].terms):
                        best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[rank], m[bi] = m[bi], m[rank]
        if bj != rank:
            for row in m:
                row[rank], row[bj] = row[bj], row[rank]
        piv = m[rank][rank]
        for i in range(rank + 1, nrows):
            for j in range(rank + 1, ncols):
                num = piv * m[i][j] - m[i][rank] * m[rank][j]
                m[i][j] = divexact(num, prev)
            m[i][rank] = LaurentQT()
        prev = piv
        rank += 1
        if early_stop is not None and rank >= early_stop:
            break
    return rank


def _specialized_rank(matrix, qv, tv):
    """Rank after the substitution q -> qv, t -> tv (a lower bound)."""
    rows = []
    for row in matrix:
        rows.append([sum((c * qv ** a * tv ** b for (a, b), c in p.terms.items()),
                         Fraction(0)) for p in row])
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, nrows):
            if rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def matrix_rank(matrix):
    """Exact rank over the fraction field of LaurentQT.

    A random rational specialization gives a certified answer whenever it
    already has full column rank; otherwise fall back to exact elimination.
    """
    if not matrix or not matrix[0]:
        return 0
    ncols = len(matrix[0])
    low = _specialized_rank(matrix, Fraction(17, 5), Fraction(23, 7))
    if low == ncols:
        return low
    return bareiss_rank(matrix)


# ---------------------------------------------------------------------------
# evaluation matrices and separating families


def degree_cap(n):
    return 4 * len(enumerate_lambda(n))


def evaluation_matrix(n, r: Regime, K, shapes=None):
    """Evaluations of e_n^j * w_k (j = 0, 1, -1; k <= K) over Lambda_n.

    Row order follows matrix_row_labels(K); the w_k values are read off as
    T^k coefficients of the expanded W series and e_n is the product of the
    drunk contents.  Returns the matrix together with its exact rank.
    """
    if K > degree_cap(n):
        raise ResourceLimit("order %d exceeds cap %d at level %d"
                            % (K, degree_cap(n), n))
    if shapes is None:
        shapes = enumerate_lambda(n)
    matrix = _build_matrix(n, r, K, shapes)
    return matrix, matrix_rank(matrix)


def matrix_row_labels(K):
    """(j, k) labels meaning e_n^j * w_k, in row order."""
    return [(j, k) for j in (0, 1, -1) for k in range(K + 1)]


def _build_matrix(n, r, K, shapes):
    # linear combinations of w_k alone can be rank deficient (first at
    # n = 5), so rows also cover the products e_n^{+-1} w_k
    columns = []
    for lp in shapes:
        values = drunk_content_values(n, lp.shape, r)
        w = expand_W_series(values, K).coeffs
        e = LaurentQT.const(1)
        for v in values:
            e = e * v.monomial()
        einv = e.monomial_inverse()
        columns.append(w + [e * c for c in w] + [einv * c for c in w])
    return [[col[k] for col in columns] for k in range(3 * (K + 1))]


def adaptive_matrix(n, r: Regime, shapes=None):
    """Grow K until the rank stabilizes or hits the column count.

    While growing, only the cheap specialized lower bound is tracked; the
    exact rank is computed once on the final matrix.
    """
    if shapes is None:
        shapes = enumerate_lambda(n)
    K = max(n, 1)
    prev_probe = -1
    while True:
        matrix = _build_matrix(n, r, K, shapes)
        probe = _specialized_rank(matrix, Fraction(17, 5), Fraction(23, 7))
        if probe == len(shapes) or probe == prev_probe or K >= degree_cap(n):
            return matrix, matrix_rank(matrix), K
        prev_probe = probe
        K = min(2 * K, degree_cap(n))


class LaurentFrac:
    """Quotient of two LaurentQT polynomials, lightly normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentQT.const(1)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        q = divexact(num, den)
        if q is not None:
            num, den = q, LaurentQT.const(1)
        # scale so the denominator's leading term is a plain monomial
        if not den.is_monomial():
            lead = max(den.terms)
            c = den.terms[lead]
            num = num * (1 / c)
            den = den * (1 / c)
        else:
            num = num * den.monomial_inverse()
            den = LaurentQT.const(1)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        return cls(LaurentQT.const(c))

    @property
    def is_zero(self):
        return self.num.is_zero

    def __eq__(self, other):
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __sub__(self, other):
        return LaurentFrac(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def __mul__(self, other):
        return LaurentFrac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("division by zero fraction")
        return LaurentFrac(self.num * other.den, self.den * other.num)

    def __str__(self):
        if self.den == LaurentQT.const(1):
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


def separating_family(n, r: Regime):
    """Unitriangular combinations of the wheel family separating classes.

    Returns (representatives, coefficient vectors, K).  Combination i
    evaluates to 1 on representative i and to 0 on all earlier ones; the
    coefficient vectors follow matrix_row_labels(K).
    """
    report = separation_classes(n, r)
    reps = [c[0] for c in report.classes]
    matrix, rank, K = adaptive_matrix(n, r, reps)
    if rank < len(reps):
        raise ResourceLimit("rank %d below %d classes at cap order" % (rank, len(reps)))
    rows = _independent_rows(matrix, len(reps))
    m = len(reps)
    # fraction-free forward elimination on [A | I]; fractions appear only
    # in the final scaling by the row pivot
    aug = [[matrix[rows[i]][j] for j in range(m)]
           + [LaurentQT.const(1 if i == k else 0) for k in range(m)]
           for i in range(m)]
    prev = LaurentQT.const(1)
    for r in range(m):
        swap = min((i for i in range(r, m) if not aug[i][r].is_zero),
                   key=lambda i: len(aug[i][r].terms))
        aug[r], aug[swap] = aug[swap], aug[r]
        piv = aug[r][r]
        for i in range(r + 1, m):
            for j in range(r + 1, 2 * m):
                aug[i][j] = divexact(piv * aug[i][j] - aug[i][r] * aug[r][j], prev)
            aug[i][r] = LaurentQT()
        prev = piv
    zero = LaurentFrac.const(0)
    family = []
    for i in range(m):
        full = [zero] * len(matrix)
        for k in range(m):
            full[rows[k]] = LaurentFrac(aug[i][m + k], aug[i][i])
        family.append(full)
    return reps, family, K


def _independent_rows(matrix, m):
    """Indices of m rows whose square submatrix is invertible.

    Selected on a rational specialization; an invertible specialized
    submatrix certifies symbolic invertibility.
    """
    qv, tv = Fraction(17, 5), Fraction(23, 7)
    rows = []
    for row in matrix:
        rows.append([sum((c * qv ** a * tv ** b for (a, b), c in p.terms.items()),
                         Fraction(0)) for p in row])
    chosen = []
    work = []
    for idx, row in enumerate(rows):
        cand = list(row)
        for lead, other in work:
            if cand[lead]:
                f = cand[lead] / other[lead]
                cand = [x - f * y for x, y in zip(cand, other)]
        lead = next((j for j, x in enumerate(cand) if x), None)
        if lead is None:
            continue
        work.append((lead, cand))
        chosen.append(idx)
        if len(chosen) == m:
            return chosen
    raise ResourceLimit("specialization failed to certify %d rows" % m)
