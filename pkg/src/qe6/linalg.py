"""Exact sparse linear algebra over the Laurent coefficient ring.

Rank and span questions are answered fraction-free: rows are cross-multiplied
during elimination and re-normalized by their integer content and a power of q
(both units or contents, so row spans over the fraction field are preserved).
Dense Bareiss elimination is provided for the small proof matrices, and a
modular specialization handles the heavy degree-3 comparisons.
"""

from math import gcd

from .qcoeff import LaurentPoly, ONE, ZERO, RatFunc


class SparseMat:
    """Immutable-by-convention sparse matrix with LaurentPoly entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    self.entries[(r, c)] = v

    @classmethod
    def _raw(cls, nrows, ncols, entries):
        self = cls.__new__(cls)
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries
        return self

    @classmethod
    def identity(cls, n):
        return cls._raw(n, n, {(i, i): ONE for i in range(n)})

    def __eq__(self, other):
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and \
            self.entries == other.entries

    def __ne__(self, other):
        return not self.__eq__(other)

    def get(self, r, c):
        return self.entries.get((r, c), ZERO)

    def add(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return SparseMat._raw(self.nrows, self.ncols, out)

    def sub(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, ZERO) - v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return SparseMat._raw(self.nrows, self.ncols, out)

    def scale(self, s):
        if not s:
            return SparseMat._raw(self.nrows, self.ncols, {})
        return SparseMat._raw(self.nrows, self.ncols,
                              {k: v * s for k, v in self.entries.items()})

    def mul(self, other):
        assert self.ncols == other.nrows
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc = out.get(key, ZERO) + v * w
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return SparseMat._raw(self.nrows, other.ncols, out)

    def kron(self, other):
        on, om = other.nrows, other.ncols
        out = {}
        for (r1, c1), v1 in self.entries.items():
            for (r2, c2), v2 in other.entries.items():
                out[(r1 * on + r2, c1 * om + c2)] = v1 * v2
        return SparseMat._raw(self.nrows * on, self.ncols * om, out)

    def apply(self, vec):
        """Apply to a column vector given as {row_index: LaurentPoly}."""
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                acc = out.get(r, ZERO) + v * x
                if acc:
                    out[r] = acc
                elif r in out:
                    del out[r]
        return out

    def commutes_with(self, other):
        return self.mul(other) == other.mul(self)

    def is_zero(self):
        return not self.entries

    def to_json(self, row_label=str, col_label=str):
        ents = [{"r": row_label(r), "c": col_label(c), "value": v.to_json()}
                for (r, c), v in sorted(self.entries.items())]
        return {"rows": self.nrows, "cols": self.ncols, "entries": ents}


def mat_eval_mod(mat, q0, p):
    """Specialize a SparseMat at q = q0 over GF(p); returns {(r, c): int}."""
    out = {}
    for k, v in mat.entries.items():
        x = v.eval_mod(q0, p)
        if x:
            out[k] = x
    return out


# --- sparse row utilities ---------------------------------------------------

def row_normalize(row):
    """Strip the integer content and the common power of q from a sparse row."""
    if not row:
        return row
    g = 0
    shift = None
    for v in row.values():
        for e, c in v.c.items():
            g = gcd(g, c)
            if shift is None or e < shift:
                shift = e
    if g == 1 and not shift:
        return row
    out = {}
    for k, v in row.items():
        out[k] = LaurentPoly._raw({e - shift: x // g for e, x in v.c.items()})
    return out


class Echelon:
    """Incremental fraction-free row echelon over the Laurent ring.

    add() returns True when the row enlarges the span.  Rows are kept with
    their minimal column as pivot; reduction is by cross-multiplication, so
    no fractions ever appear.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def residue(self, row):
        row = row_normalize({k: v for k, v in row.items() if v})
        while row:
            c = min(row)
            base = self.rows.get(c)
            if base is None:
                return row
            f = row.pop(c)
            piv = base[c]
            out = {}
            for k in set(row) | set(base):
                if k == c:
                    continue
                v = row.get(k, ZERO) * piv - base.get(k, ZERO) * f
                if v:
                    out[k] = v
            row = row_normalize(out)
        return row

    def contains(self, row):
        return not self.residue(row)

    def add(self, row):
        res = self.residue(row)
        if not res:
            return False
        self.rows[min(res)] = res
        return True

    def add_all(self, rows):
        grew = 0
        for row in rows:
            if self.add(row):
                grew += 1
        return grew


class EchelonMod:
    """Row echelon over GF(p) for rows given as {col: int}."""

    __slots__ = ("p", "rows")

    def __init__(self, p):
        self.p = p
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def residue(self, row):
        p = self.p
        row = {k: v % p for k, v in row.items() if v % p}
        while row:
            c = min(row)
            base = self.rows.get(c)
            if base is None:
                return row
            f = row.pop(c) * pow(base[c], p - 2, p) % p
            for k, v in base.items():
                if k == c:
                    continue
                w = (row.get(k, 0) - f * v) % p
                if w:
                    row[k] = w
                elif k in row:
                    del row[k]
        return row

    def add(self, row):
        res = self.residue(row)
        if not res:
            return False
        self.rows[min(res)] = res
        return True

    def add_all(self, rows):
        grew = 0
        for row in rows:
            if self.add(row):
                grew += 1
        return grew


def span_rank(rows):
    ech = Echelon()
    ech.add_all(rows)
    return ech.rank


def spans_equal(rows_a, rows_b):
    """Exact equality of the two row spans over the fraction field."""
    ea = Echelon()
    ea.add_all(rows_a)
    eb = Echelon()
    eb.add_all(rows_b)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(r) for r in rows_b) and all(eb.contains(r) for r in rows_a)


def rank_mod(rows, q0, p):
    """Rank of Laurent rows specialized at q = q0 over GF(p) (a lower bound
    on the exact rank, with equality for all but finitely many q0)."""
    ech = EchelonMod(p)
    for row in rows:
        spec = {}
        for k, v in row.items():
            x = v.eval_mod(q0, p)
            if x:
                spec[k] = x
        ech.add(spec)
    return ech.rank


# --- dense Bareiss elimination ----------------------------------------------

def bareiss_echelon(mat):
    """Fraction-free Gaussian elimination on a dense list-of-lists copy.

    Returns (rank, pivots, reduced matrix).  All divisions are exact by the
    Bareiss identity, which keeps intermediate entries determinant-sized.
    """
    m = [list(row) for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = ONE
    rank = 0
    pivots = []
    for col in range(ncols):
        piv_row = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv_row = r
                break
        if piv_row is None:
            continue
        m[rank], m[piv_row] = m[piv_row], m[rank]
        piv = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            for c in range(ncols):
                v = m[r][c] * piv - m[rank][c] * f
                if prev is not ONE and v:
                    v = v.exact_div(prev)
                m[r][c] = v
            m[r][col] = ZERO
        prev = piv
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, m


def bareiss_rank(mat):
    return bareiss_echelon(mat)[0]


def ratfunc_inverse(mat):
    """Exact inverse of a small dense LaurentPoly matrix via RatFunc pivoting.

    Returns a list-of-lists of RatFunc, or None if the matrix is singular.
    """
    n = len(mat)
    aug = [[RatFunc.from_poly(mat[r][c]) for c in range(n)] +
           [RatFunc(1) if c == r else RatFunc(0) for c in range(n)]
           for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
