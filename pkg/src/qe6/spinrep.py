"""The quantum exterior algebra and the 16-dimensional half-spin representation.

Basis vectors of the module are indexed by the even subsets in lex-code order.
All sign/power bookkeeping of the exterior algebra lives in ext_mul: a
descending adjacent pair contributes one factor of (-q), so a basis product
picks up (-q)^(number of inversions).  The representing matrices are assembled
from that normalization plus the displayed closed formulas, and every defining
relation of the rank-5 quantized enveloping algebra is then checked as an
exact 16x16 matrix identity.
"""

from .qcoeff import LaurentPoly, ONE, ZERO, QHAT, qpow, neg_qpow, Q, QINV
from . import rootdata as rd
from .linalg import SparseMat

SPIN_BASIS = rd.BSETS
SPIN_INDEX = {m: i for i, m in enumerate(SPIN_BASIS)}
DIM = 16


def _inversions(mask_left, mask_right):
    inv = 0
    for j in rd.members(mask_right):
        inv += bin(mask_left >> j).count("1")
    return inv


def ext_mul_basis(mask_left, mask_right):
    """Product of two basis monomials: (coefficient, mask) or None if it dies."""
    if mask_left & mask_right:
        return None
    return neg_qpow(_inversions(mask_left, mask_right)), mask_left | mask_right


class ExtElement(dict):
    """Element of the quantum exterior algebra: {subset mask: LaurentPoly}."""

    __slots__ = ()

    @classmethod
    def basis(cls, mask, coeff=ONE):
        out = cls()
        if coeff:
            out[mask] = coeff
        return out

    def iadd(self, mask, coeff):
        acc = self.get(mask, ZERO) + coeff
        if acc:
            self[mask] = acc
        elif mask in self:
            del self[mask]

    def __add__(self, other):
        out = ExtElement(self)
        for m, c in other.items():
            out.iadd(m, c)
        return out

    def __sub__(self, other):
        out = ExtElement(self)
        for m, c in other.items():
            out.iadd(m, -c)
        return out

    def scale(self, s):
        if not s:
            return ExtElement()
        return ExtElement({m: c * s for m, c in self.items()})


def ext_mul(a, b):
    out = ExtElement()
    for ma, ca in a.items():
        for mb, cb in b.items():
            hit = ext_mul_basis(ma, mb)
            if hit is not None:
                coeff, mask = hit
                out.iadd(mask, ca * cb * coeff)
    return out


def _sign(x):
    return (x > 0) - (x < 0)


def _c_exp(i, j, mask):
    return _sign(i - j) * (i + j - 3 - 2 * bin(mask).count("1"))


_RHO_CACHE = {}


def rho_matrix(kind, i, j=None):
    """Matrix of one root vector or group-like generator on the spin module.

    kind "E" with (i, j), i != j: moves index j to index i.
    kind "Eprime" with (i, j), i != j: annihilates the pair {i, j} when i < j,
    creates it when i > j.
    kind "K" with i in the acting index set: diagonal q-powers.
    """
    key = (kind, i, j)
    if key in _RHO_CACHE:
        return _RHO_CACHE[key]
    entries = {}
    if kind == "K":
        if i not in rd.IPRIME:
            raise ValueError("K index must lie in the acting diagram")
        for col, mask in enumerate(SPIN_BASIS):
            entries[(col, col)] = qpow(rd.inner(rd.ALPHA[i], rd.WT[mask]))
    elif kind == "E":
        if i == j:
            raise ValueError("root-vector indices must differ")
        bit_i, bit_j = 1 << (i - 1), 1 << (j - 1)
        for col, mask in enumerate(SPIN_BASIS):
            if not mask & bit_j:
                continue
            base = mask & ~bit_j
            if base & bit_i:
                continue
            # u_mask = (-q)^{-a} u_base v_j;  u_base v_i = (-q)^b u_target
            a = bin(base >> j).count("1")
            b = bin(base >> i).count("1")
            exp = (i - j - _sign(i - j)) + b - a
            entries[(SPIN_INDEX[base | bit_i], col)] = neg_qpow(exp)
    elif kind == "Eprime":
        if i == j:
            raise ValueError("root-vector indices must differ")
        bit_i, bit_j = 1 << (i - 1), 1 << (j - 1)
        if i < j:
            for col, mask in enumerate(SPIN_BASIS):
                if mask & bit_i and mask & bit_j:
                    base = mask & ~(bit_i | bit_j)
                    a = bin(base >> i).count("1") + bin(base >> j).count("1")
                    exp = _c_exp(i, j, base) - a
                    entries[(SPIN_INDEX[base], col)] = neg_qpow(exp)
        else:
            for col, mask in enumerate(SPIN_BASIS):
                if mask & (bit_i | bit_j):
                    continue
                b = bin(mask >> i).count("1") + bin(mask >> j).count("1")
                exp = _c_exp(i, j, mask) + b
                entries[(SPIN_INDEX[mask | bit_i | bit_j], col)] = neg_qpow(exp)
    else:
        raise ValueError("unknown generator kind %r" % (kind,))
    mat = SparseMat(DIM, DIM, entries)
    _RHO_CACHE[key] = mat
    return mat


def chevalley_action(kind, i):
    """Simple generators identified among the root vectors by their degree."""
    if i not in rd.IPRIME:
        raise ValueError("index %r outside the acting diagram" % (i,))
    if kind == "K":
        return rho_matrix("K", i)
    if kind == "Kinv":
        mat = rho_matrix("K", i)
        return SparseMat(DIM, DIM, {k: qpow(-v.max_exp()) for k, v in mat.entries.items()})
    if kind not in ("E", "F"):
        raise ValueError("unknown generator kind %r" % (kind,))
    if i == 2:
        pair = (1, 2) if kind == "E" else (2, 1)
        return rho_matrix("Eprime", *pair)
    pair = (i - 2, i - 1) if kind == "E" else (i - 1, i - 2)
    return rho_matrix("E", *pair)


def relation_failures():
    """Defining relations of the acting algebra as exact matrix identities."""
    fails = []
    mats = {(k, i): chevalley_action(k, i)
            for k in ("E", "F", "K", "Kinv") for i in rd.IPRIME}
    ident = SparseMat.identity(DIM)
    zero = SparseMat(DIM, DIM)
    for i in rd.IPRIME:
        if mats[("K", i)].mul(mats[("Kinv", i)]) != ident:
            fails.append("K%d inverse" % i)
        for j in rd.IPRIME:
            aij = rd.GRAM[i][j]
            ki, ej, fj = mats[("K", i)], mats[("E", j)], mats[("F", j)]
            if ki.mul(ej) != ej.mul(ki).scale(qpow(aij)):
                fails.append("K%d E%d scaling" % (i, j))
            if ki.mul(fj) != fj.mul(ki).scale(qpow(-aij)):
                fails.append("K%d F%d scaling" % (i, j))
            ei = mats[("E", i)]
            comm = ei.mul(fj).sub(fj.mul(ei)).scale(QHAT)
            want = mats[("K", i)].sub(mats[("Kinv", i)]) if i == j else zero
            if comm != want:
                fails.append("commutator E%d F%d" % (i, j))
            if i != j:
                for kind in ("E", "F"):
                    a, b = mats[(kind, i)], mats[(kind, j)]
                    if aij == 0:
                        ok = a.mul(b) == b.mul(a)
                    else:
                        ok = (a.mul(a).mul(b)
                              .sub(a.mul(b).mul(a).scale(Q + QINV))
                              .add(b.mul(a).mul(a))).is_zero()
                    if not ok:
                        fails.append("serre %s%d %s%d" % (kind, i, kind, j))
    return fails


def weight_support_failures():
    """Each raising matrix must move weight spaces by exactly its simple root,
    and the module's weight multiset must be the full radical-root family."""
    fails = []
    for i in rd.IPRIME:
        for (r, c), _ in chevalley_action("E", i).entries.items():
            if rd.WT[SPIN_BASIS[r]] != rd.wadd(rd.WT[SPIN_BASIS[c]], rd.ALPHA[i]):
                fails.append("E%d moves %s to %s" % (i, rd.label(SPIN_BASIS[c]),
                                                     rd.label(SPIN_BASIS[r])))
    weights = sorted(rd.WT[m] for m in SPIN_BASIS)
    radical = sorted(rd.WT[m] for m in rd.ALL_MASKS)
    if weights != radical:
        fails.append("weight multiset differs from the radical-root family")
    return fails


def irreducibility_check():
    """Highest weight vector u_e is killed by raising operators and its
    lowering closure fills all 16 dimensions."""
    top = SPIN_INDEX[0]
    for i in rd.IPRIME:
        col = [r for (r, c) in chevalley_action("E", i).entries if c == top]
        if col:
            fails = ["E%d does not kill the top vector" % i]
            return False, fails
    reached = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for v in frontier:
            for i in rd.IPRIME:
                for (r, c) in chevalley_action("F", i).entries:
                    if c == v and r not in reached:
                        reached.add(r)
                        nxt.append(r)
        frontier = nxt
    ok = len(reached) == DIM
    return ok, [] if ok else ["lowering closure has dimension %d" % len(reached)]


def phi_scalars():
    """Diagonal scalars (-q)^(ht(empty) - ht(I)) of the module isomorphism."""
    top = rd.HEIGHT_B[0]
    return {m: neg_qpow(top - rd.HEIGHT_B[m]) for m in SPIN_BASIS}


def ad_generator_matrix(kind, i):
    """Adjoint action on the span of the 16 cell generators, in spin order."""
    entries = {}
    for col, mask in enumerate(SPIN_BASIS):
        if kind == "K":
            entries[(col, col)] = qpow(rd.inner(rd.ALPHA[i], rd.WT[mask]))
        elif kind == "E":
            tgt = rd.RAISE[(mask, i)]
            if tgt is not None:
                entries[(SPIN_INDEX[tgt], col)] = LaurentPoly.term(-1, 1)
        elif kind == "F":
            tgt = rd.LOWER[(mask, i)]
            if tgt is not None:
                entries[(SPIN_INDEX[tgt], col)] = LaurentPoly.term(-1, -1)
        else:
            raise ValueError(kind)
    return SparseMat(DIM, DIM, entries)


def phi_check():
    """The diagonal rescaling intertwines the adjoint action on the generator
    span with the half-spin matrices, for every Chevalley generator."""
    scal = phi_scalars()
    phi = SparseMat(DIM, DIM, {(i, i): scal[m] for i, m in enumerate(SPIN_BASIS)})
    fails = []
    for kind in ("E", "F", "K"):
        for i in rd.IPRIME:
            lhs = chevalley_action(kind, i).mul(phi)
            rhs = phi.mul(ad_generator_matrix(kind, i))
            if lhs != rhs:
                fails.append("%s%d does not intertwine" % (kind, i))
    return not fails, fails


def matrix_json(mat):
    lab = lambda k: rd.label(SPIN_BASIS[k])
    return mat.to_json(row_label=lab, col_label=lab)
