"""Exact coefficient arithmetic: Laurent polynomials in q over Z, and their fraction field.

Everything downstream (rewriting, representation matrices, R-matrix entries,
relation spans) is computed over these coefficients; no floating point anywhere.
"""

from math import gcd


class LaurentPoly:
    """Laurent polynomial in q with arbitrary-precision integer coefficients.

    Stored as a dict {exponent: coefficient} with no zero values; the zero
    polynomial has an empty dict.  Instances are treated as immutable.
    """

    __slots__ = ("c",)

    def __init__(self, c=None):
        if c:
            self.c = {e: v for e, v in c.items() if v}
        else:
            self.c = {}

    @classmethod
    def _raw(cls, c):
        # internal: trusts c to be pruned already
        self = cls.__new__(cls)
        self.c = c
        return self

    @classmethod
    def from_int(cls, n):
        return cls._raw({0: n} if n else {})

    @classmethod
    def term(cls, coeff, exp):
        return cls._raw({exp: coeff} if coeff else {})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self.c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) - v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        return LaurentPoly._raw(c)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: v * other for e, v in self.c.items()})
        a, b = self.c, other.c
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                w = c.get(e, 0) + va * vb
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        return LaurentPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.c) == 1:
                ((e, v),) = self.c.items()
                if v in (1, -1):
                    return LaurentPoly._raw({e * n: -1 if (v == -1 and n & 1) else 1})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: v for e, v in self.c.items()})

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def content(self):
        """gcd of the integer coefficients, signed by the leading coefficient."""
        if not self.c:
            return 0
        g = 0
        for v in self.c.values():
            g = gcd(g, abs(v))
        if self.c[max(self.c)] < 0:
            g = -g
        return g

    def divide_int(self, n):
        out = {}
        for e, v in self.c.items():
            w, r = divmod(v, n)
            if r:
                raise ValueError("inexact integer division of coefficients")
            out[e] = w
        return LaurentPoly._raw(out)

    def exact_div(self, other):
        """Exact division in the Laurent ring; raises ValueError if inexact."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return ZERO
        sa, sb = self.min_exp(), other.min_exp()
        rem = {e - sa: v for e, v in self.c.items()}
        den = {e - sb: v for e, v in other.c.items()}
        dmax = max(den)
        dlead = den[dmax]
        quot = {}
        while rem:
            rmax = max(rem)
            if rmax < dmax:
                raise ValueError("inexact polynomial division")
            qc, r = divmod(rem[rmax], dlead)
            if r:
                raise ValueError("inexact polynomial division")
            qe = rmax - dmax
            quot[qe] = qc
            for e, v in den.items():
                ee = e + qe
                w = rem.get(ee, 0) - qc * v
                if w:
                    rem[ee] = w
                elif ee in rem:
                    del rem[ee]
        return LaurentPoly._raw({e + sa - sb: v for e, v in quot.items() if v})

    def eval_mod(self, q0, p):
        """Evaluate at q = q0 in the field of p elements; q0 must be invertible."""
        if q0 % p == 0:
            raise ValueError("q must be evaluated at an invertible residue")
        acc = 0
        for e, v in self.c.items():
            acc = (acc + v * pow(q0, e, p)) % p
        return acc

    def to_json(self):
        return {str(e): str(v) for e, v in sorted(self.c.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(v) for e, v in obj.items()})

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            sign = "-" if v < 0 else "+"
            av = abs(v)
            if e == 0:
                body = str(av)
            else:
                qp = "q" if e == 1 else "q^%d" % e
                body = qp if av == 1 else "%d*%s" % (av, qp)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    __repr__ = __str__


ZERO = LaurentPoly.from_int(0)
ONE = LaurentPoly.from_int(1)
Q = LaurentPoly.term(1, 1)
QINV = LaurentPoly.term(1, -1)


def qpow(k):
    """The monomial q^k."""
    return LaurentPoly.term(1, k)


def neg_qpow(k):
    """(-q)^k, for any integer k."""
    return LaurentPoly.term(-1 if k & 1 else 1, k)


def qint(n):
    """Balanced q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0."""
    if n < 0:
        raise ValueError("q-integers are defined for n >= 0 here")
    return LaurentPoly._raw({e: 1 for e in range(1 - n, n, 2)})


def qhat():
    """The ubiquitous relation coefficient q - q^{-1}."""
    return LaurentPoly._raw({1: 1, -1: -1})


QHAT = qhat()


def lp_arith(a, b, kind):
    """Dispatch form of the ring operations (add/sub/mul)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError("unknown arithmetic kind %r" % (kind,))


def lp_eval_mod(a, q0, p):
    return a.eval_mod(q0, p)


# -- ordinary (non-Laurent) polynomial helpers used for gcd and fractions --

def _prune(c):
    return {e: v for e, v in c.items() if v}


def _poly_content(c):
    g = 0
    for v in c.values():
        g = gcd(g, abs(v))
    return g or 1


def _poly_prem(a, b):
    """Pseudo-remainder of a by b (dicts with exponents >= 0, b nonzero)."""
    a = dict(a)
    dmax = max(b)
    dlead = b[dmax]
    while a and max(a) >= dmax:
        rmax = max(a)
        lead = a[rmax]
        # scale a by dlead so the leading terms cancel exactly
        a = {e: v * dlead for e, v in a.items()}
        sh = rmax - dmax
        for e, v in b.items():
            ee = e + sh
            w = a.get(ee, 0) - lead * v
            if w:
                a[ee] = w
            elif ee in a:
                del a[ee]
    return a


def poly_gcd(a, b):
    """gcd in Z[q] of two exponent dicts (exponents >= 0), up to sign.

    Primitive PRS: contents are stripped at every step to keep coefficients
    small; the result carries gcd of the contents and a positive leading
    coefficient.
    """
    a, b = _prune(a), _prune(b)
    if not a:
        base = b
    elif not b:
        base = a
    else:
        ca, cb = _poly_content(a), _poly_content(b)
        g = gcd(ca, cb)
        a = {e: v // ca for e, v in a.items()}
        b = {e: v // cb for e, v in b.items()}
        while b:
            r = _poly_prem(a, b)
            a, b = b, r
            if b:
                cc = _poly_content(b)
                b = {e: v // cc for e, v in b.items()}
        base = {e: v * g for e, v in a.items()}
    if not base:
        return {}
    if base[max(base)] < 0:
        base = {e: -v for e, v in base.items()}
    return base


class RatFunc:
    """Fraction num/den of Laurent polynomials in canonical form.

    Canonical: den is an ordinary polynomial with nonzero constant term and
    positive leading coefficient, and gcd(num, den) over Z[q] is trivial, so
    equal values have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly.from_int(num)
        if isinstance(den, int):
            den = LaurentPoly.from_int(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = ZERO
            self.den = ONE
            return
        # make the denominator an honest polynomial with constant term != 0
        k = den.min_exp()
        den_c = {e - k: v for e, v in den.c.items()}
        num = num.shift(-k)
        # strip the gcd (num's own q-shift is a unit; factor it out first)
        m = num.min_exp()
        num_c = {e - m: v for e, v in num.c.items()}
        g = poly_gcd(num_c, den_c)
        if g != {0: 1}:
            gp = LaurentPoly._raw(g)
            num = LaurentPoly._raw(num_c).exact_div(gp).shift(m)
            den_c = LaurentPoly._raw(den_c).exact_div(gp).c
        if den_c[max(den_c)] < 0:
            num = -num
            den_c = {e: -v for e, v in den_c.items()}
        self.num = num
        self.den = LaurentPoly._raw(den_c)

    @classmethod
    def from_poly(cls, p):
        self = cls.__new__(cls)
        self.num = p
        self.den = ONE
        return self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den == ONE and self.num == other
        if isinstance(other, LaurentPoly):
            return self.den == ONE and self.num == other
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return _as_ratfunc(other).__sub__(self)

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other).__truediv__(self)

    def inv(self):
        return RatFunc(self.den, self.num)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc.from_poly(x)
    if isinstance(x, int):
        return RatFunc.from_poly(LaurentPoly.from_int(x))
    raise TypeError("cannot coerce %r to a rational function" % (x,))
