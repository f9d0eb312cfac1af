"""Root data for D5 inside E6 and its affine extension.

The 16 even subsets of {1,...,5} index the radical roots used everywhere else.
This module owns the exact weight arithmetic (7 integer coordinates over the
simple roots alpha_0..alpha_6), the partial order on subsets, the equivalence
classes and heights on pairs, and the epsilon predicate of the mixed relations.

Subsets are 5-bit masks (bit i-1 <-> element i).  The Euclidean model with its
sqrt(3) component is used only transiently, with Fraction arithmetic, to solve
for the alpha-coordinates; nothing irrational leaks out.
"""

from fractions import Fraction

NODES = range(7)          # simple roots alpha_0 .. alpha_6
IPRIME = (2, 3, 4, 5, 6)  # D5 sub-diagram

# symmetric Gram matrix of the affine diagram (simply laced, edges below)
_EDGES = {(0, 2), (1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}
GRAM = [[2 if i == j else (-1 if (min(i, j), max(i, j)) in _EDGES else 0)
         for j in NODES] for i in NODES]


def inner(x, y):
    """Exact symmetric bilinear form on alpha-coordinate vectors."""
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = GRAM[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * row[j] * yj
    return total


def wadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def wsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


ALPHA = tuple(tuple(1 if j == i else 0 for j in NODES) for i in NODES)

# --- Euclidean model (coordinates over e_1..e_5 and sqrt(3)*e_6) ------------

_HALF = Fraction(1, 2)
_ALPHA_E = {
    1: (_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF),
    2: (1, 1, 0, 0, 0, 0),
    3: (-1, 1, 0, 0, 0, 0),
    4: (0, -1, 1, 0, 0, 0),
    5: (0, 0, -1, 1, 0, 0),
    6: (0, 0, 0, -1, 1, 0),
}


def _solve_alpha_coords(vec):
    # solve sum_i c_i alpha_i = vec in the Euclidean model; returns integer c_1..c_6
    n = 6
    rows = [[_ALPHA_E[j + 1][i] for j in range(n)] + [vec[i]] for i in range(n)]
    rows = [[Fraction(x) for x in row] for row in rows]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    coords = [rows[i][n] for i in range(n)]
    assert all(c.denominator == 1 for c in coords)
    return tuple(int(c) for c in coords)


_THETA_E = tuple(sum((c * Fraction(x) for c, x in zip((1, 2, 2, 3, 2, 1),
                                                      (_ALPHA_E[j][i] for j in range(1, 7)))),
                     Fraction(0)) for i in range(6))

ELEMS = (1, 2, 3, 4, 5)
ALL_MASKS = tuple(m for m in range(32) if bin(m).count("1") % 2 == 0)


def members(mask):
    return tuple(i for i in ELEMS if mask >> (i - 1) & 1)


def mask_of(elems):
    m = 0
    for i in elems:
        m |= 1 << (i - 1)
    return m


def label(mask):
    """Subset label used in all I/O: sorted digit string, empty set = 'e'."""
    return "".join(str(i) for i in members(mask)) or "e"


def parse_label(text):
    if text == "e":
        return 0
    if not text or not all(ch in "12345" for ch in text) or len(set(text)) != len(text):
        raise ValueError("bad subset label %r" % (text,))
    m = mask_of(int(ch) for ch in text)
    if m not in WT:
        raise ValueError("subset %r does not have even cardinality" % (text,))
    return m


def lex_code(mask):
    """Decimal code of a subset: its digits in increasing order read as a number.

    Equals sum 10^{j-1} i_j over the decreasing enumeration i_1 > ... > i_l;
    the empty set codes to 0.
    """
    code = 0
    for i in members(mask):
        code = code * 10 + i
    return code


def wt(mask):
    """Weight of a subset in alpha-coordinates (the alpha_0 coordinate is 0)."""
    return WT[mask]


def _compute_wt(mask):
    vec = list(_THETA_E)
    for i in members(mask):
        vec[i - 1] -= 1
    return (0,) + _solve_alpha_coords(tuple(vec))


WT = {m: _compute_wt(m) for m in ALL_MASKS}
WT_TO_MASK = {WT[m]: m for m in ALL_MASKS}

THETA = WT[0]
DELTA = wadd(ALPHA[0], THETA)

LEXCODE = {m: lex_code(m) for m in ALL_MASKS}
BSETS = tuple(sorted(ALL_MASKS, key=LEXCODE.get))       # basis order for dumps / spin rep
HEIGHT_B = {m: sum(WT[m]) for m in ALL_MASKS}
TOT_ORDER = tuple(sorted(ALL_MASKS, key=lambda m: (HEIGHT_B[m], LEXCODE[m])))
TOT_RANK = {m: r for r, m in enumerate(TOT_ORDER)}

INNER_WT = {(a, b): inner(WT[a], WT[b]) for a in ALL_MASKS for b in ALL_MASKS}


def leq_B(a, b):
    """a <= b in the radical-root order: wt(b) - wt(a) has nonnegative coordinates."""
    wa, wb = WT[a], WT[b]
    return all(wb[k] >= wa[k] for k in range(7))


LEQ = {(a, b): leq_B(a, b) for a in ALL_MASKS for b in ALL_MASKS}


def height_B(mask):
    """Coordinate sum of wt; grades the 16-element poset from 1 to 11."""
    return HEIGHT_B[mask]


class PairClass:
    """One equivalence class of pairs under wt(I)+wt(J) = wt(K)+wt(L)."""

    __slots__ = ("members", "heights")

    def __init__(self, mem, heights):
        self.members = tuple(mem)
        self.heights = tuple(heights)

    @property
    def size(self):
        return len(self.members)

    def height_of(self, pair):
        return self.heights[self.members.index(pair)]

    def __iter__(self):
        return iter(zip(self.members, self.heights))


def _build_classes():
    groups = {}
    for a in ALL_MASKS:
        for b in ALL_MASKS:
            groups.setdefault((a | b, a & b), []).append((a, b))
    classes = []
    key_of = {}
    for mem in groups.values():
        # grade by the strict order on first components; minimal height is 1
        ht = {}
        for pair in sorted(mem, key=lambda p: HEIGHT_B[p[0]]):
            below = [ht[p] for p in mem if p != pair and LEQ[(p[0], pair[0])]]
            ht[pair] = 1 + max(below, default=0)
        mem = sorted(mem, key=lambda p: (ht[p], LEXCODE[p[0]]))
        cls = PairClass(mem, [ht[p] for p in mem])
        for p in mem:
            key_of[p] = len(classes)
        classes.append(cls)
    return classes, key_of


CLASSES, _CLASS_KEY = _build_classes()
HT_PAIR = {p: CLASSES[k].height_of(p) for p, k in _CLASS_KEY.items()}


def class_of(a, b):
    return CLASSES[_CLASS_KEY[(a, b)]]


def ht_pair(a, b):
    return HT_PAIR[(a, b)]


def epsilon(a, b):
    """1 iff a < b strictly and the weights are orthogonal."""
    return 1 if (a != b and LEQ[(a, b)] and INNER_WT[(a, b)] == 0) else 0


EPS = {(a, b): epsilon(a, b) for a in ALL_MASKS for b in ALL_MASKS}

# octet classes sorted the way the big table lists them (by first member label)
OCTETS = tuple(sorted((c for c in CLASSES if c.size == 8),
                      key=lambda c: LEXCODE[c.members[0][0]]))

# raising/lowering moves inside the radical-root family, per D5 node
RAISE = {(m, i): WT_TO_MASK.get(wadd(WT[m], ALPHA[i]))
         for m in ALL_MASKS for i in IPRIME}
LOWER = {(m, i): WT_TO_MASK.get(wsub(WT[m], ALPHA[i]))
         for m in ALL_MASKS for i in IPRIME}


def classes_json():
    """Class table as JSON-ready rows of {first, second, height}."""
    rows = []
    for cls in CLASSES:
        rows.append([{"first": label(a), "second": label(b), "height": h}
                     for (a, b), h in cls])
    return rows
