"""Exact arithmetic building blocks.

Dense univariate polynomials are plain coefficient lists in ascending
degree order with no trailing zeros; [] is the zero polynomial.
Coefficients are Python ints (arbitrary precision), fractions.Fraction,
or residues in [0, q) when a prime modulus q is passed to an operation.

On top of the polynomial layer sit three quotient structures:

  * CycloVec: the ring Z[X]/(X^p - 1) held as a length-p vector.  The
    prime cyclotomic quotient Z[X]/(1 + X + ... + X^(p-1)) is reached
    through it: an element maps to zero there exactly when all p
    coordinates are equal.
  * ExtField: F_q[X]/(pbar) for a monic irreducible pbar, elements as
    fixed-length coefficient tuples.
  * NumberField: Q[X]/(P) for a monic integer P, elements as tuples of
    ints/Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def poly_trim(cs: list) -> list:
    """Drop trailing zeros in place so representations are canonical."""
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    del cs[n:]
    return cs


def poly_deg(f) -> int:
    return len(f) - 1


def poly_add(f, g, q: int | None = None):
    res = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        res[i] = c
    for i, c in enumerate(g):
        res[i] += c
    if q is not None:
        res = [c % q for c in res]
    return poly_trim(res)


def poly_neg(f, q: int | None = None):
    if q is not None:
        return [(-c) % q for c in f]
    return [-c for c in f]


def poly_sub(f, g, q: int | None = None):
    return poly_add(f, poly_neg(g, q), q)


def poly_scale(f, a, q: int | None = None):
    if not a:
        return []
    res = [a * c for c in f]
    if q is not None:
        res = [c % q for c in res]
    return poly_trim(res)


def poly_mul(f, g, q: int | None = None):
    if not f or not g:
        return []
    res = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                res[i + j] += a * b
    if q is not None:
        res = [c % q for c in res]
    return poly_trim(res)


def poly_divmod(f, g, q: int | None = None):
    """Long division f = quot*g + rem with deg rem < deg g.

    Over F_q (q given) any nonzero divisor works.  Without q the
    computation is exact: a monic divisor keeps int coefficients ints,
    otherwise Fraction coefficients are required and int-only input
    with a non-monic divisor is an error.
    """
    g = list(g)
    poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    rem = list(f)
    poly_trim(rem)
    if len(rem) <= dg:
        return [], rem
    lead = g[-1]
    if q is not None:
        linv = pow(lead, -1, q)
    elif lead == 1:
        linv = 1
    else:
        ints_only = all(isinstance(c, int) for c in rem) and all(
            isinstance(c, int) for c in g
        )
        if ints_only:
            raise ValueError("non-monic divisor over Z; use Fraction coefficients")
        linv = Fraction(1) / lead
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if not c:
            continue
        c = c * linv
        if q is not None:
            c %= q
        quot[i - dg] = c
        for j in range(dg + 1):
            rem[i - dg + j] -= c * g[j]
        rem[i] = 0
    if q is not None:
        rem = [c % q for c in rem]
    return poly_trim(quot), poly_trim(rem)


def poly_mod(f, g, q: int | None = None):
    return poly_divmod(f, g, q)[1]


def poly_gcd(f, g, q: int | None = None):
    """Monic gcd over a field (F_q, or Q when Fractions appear)."""
    a, b = list(f), list(g)
    poly_trim(a)
    poly_trim(b)
    while b:
        a, b = b, poly_mod(a, b, q)
    if a:
        lead = a[-1]
        if q is not None:
            a = poly_scale(a, pow(lead, -1, q), q)
        elif lead != 1:
            a = poly_scale(a, Fraction(1) / lead)
    return a


def poly_xgcd(f, g, q: int | None = None):
    """Extended Euclid: returns (d, u, v) with u*f + v*g = d, d monic."""
    a, ua, va = list(f), [1], []
    b, ub, vb = list(g), [], [1]
    poly_trim(a)
    poly_trim(b)
    while b:
        quot, rem = poly_divmod(a, b, q)
        a, ua, va, b, ub, vb = (
            b,
            ub,
            vb,
            rem,
            poly_sub(ua, poly_mul(quot, ub, q), q),
            poly_sub(va, poly_mul(quot, vb, q), q),
        )
    if a:
        lead = a[-1]
        if q is not None:
            s = pow(lead, -1, q)
            a, ua, va = poly_scale(a, s, q), poly_scale(ua, s, q), poly_scale(va, s, q)
        elif lead != 1:
            s = Fraction(1) / lead
            a, ua, va = poly_scale(a, s), poly_scale(ua, s), poly_scale(va, s)
    return a, ua, va


def poly_eval(f, x, q: int | None = None):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
        if q is not None:
            acc %= q
    return acc


def poly_pow_mod(f, e: int, m, q: int | None = None):
    """f**e reduced mod m, square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    res = [1]
    base = poly_mod(f, m, q)
    while e:
        if e & 1:
            res = poly_mod(poly_mul(res, base, q), m, q)
        base = poly_mod(poly_mul(base, base, q), m, q)
        e >>= 1
    return res


def prime_cyclotomic(p: int) -> list:
    """1 + X + ... + X^(p-1), the p-th cyclotomic polynomial for prime p."""
    return [1] * p


def cyc_rotate(v: list, b: int, p: int) -> list:
    """Coefficients of X^b * v in Z[X]/(X^p - 1)."""
    b %= p
    if not b:
        return list(v)
    return v[p - b :] + v[: p - b]


def cyc_mul(x: list, y: list, p: int, q: int | None = None) -> list:
    """Cyclic convolution of two length-p vectors."""
    res = [0] * p
    yy = y + y
    for t in range(p):
        c = x[t]
        if c:
            o = p - t
            seg = yy[o : o + p]
            res = [r + c * v for r, v in zip(res, seg)]
    if q is not None:
        res = [r % q for r in res]
    return res


class CycloVec:
    """Element of Z[X]/(X^p - 1) as a length-p coefficient vector.

    The quotient by the prime cyclotomic polynomial identifies all
    powers of X; an element lies in that kernel exactly when its p
    coordinates agree, which is what is_zero_mod_phi tests.
    """

    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs=None):
        self.p = p
        if coeffs is None:
            self.c = [0] * p
        else:
            coeffs = list(coeffs)
            if len(coeffs) != p:
                raise ValueError("need exactly p coefficients")
            self.c = coeffs

    @classmethod
    def from_poly(cls, p: int, f) -> "CycloVec":
        v = [0] * p
        for i, coef in enumerate(f):
            v[i % p] += coef
        return cls(p, v)

    def __add__(self, other):
        self._check(other)
        return CycloVec(self.p, [a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        self._check(other)
        return CycloVec(self.p, [a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return CycloVec(self.p, [-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloVec(self.p, [other * a for a in self.c])
        self._check(other)
        return CycloVec(self.p, cyc_mul(self.c, other.c, self.p))

    __rmul__ = __mul__

    def rot(self, b: int) -> "CycloVec":
        return CycloVec(self.p, cyc_rotate(self.c, b, self.p))

    def is_zero_mod_phi(self) -> bool:
        c0 = self.c[0]
        return all(x == c0 for x in self.c)

    def __eq__(self, other):
        return (
            isinstance(other, CycloVec) and self.p == other.p and self.c == other.c
        )

    def __repr__(self):
        return f"CycloVec(p={self.p}, {self.c})"

    def _check(self, other):
        if not isinstance(other, CycloVec) or other.p != self.p:
            raise ValueError("mixed cyclic rings")


class ExtField:
    """F_q[X]/(pbar) with elements as length-r coefficient tuples.

    pbar must be monic of degree r >= 1 with coefficients in [0, q).
    Elements from different moduli never interoperate.
    """

    def __init__(self, q: int, pbar):
        pbar = tuple(c % q for c in pbar)
        if len(pbar) < 2 or pbar[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.q = q
        self.pbar = pbar
        self.r = len(pbar) - 1
        r = self.r
        self.zero = (0,) * r
        self.one = (1,) + (0,) * (r - 1)
        if r == 1:
            self.gen = ((q - pbar[0]) % q,)
        else:
            self.gen = (0, 1) + (0,) * (r - 2)
        self._pow_cache: dict = {}

    def add(self, a, b):
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.q
        return tuple((-x) % q for x in a)

    def scalar(self, c: int):
        return ((c % self.q,) + (0,) * (self.r - 1))

    def smul(self, c: int, a):
        q = self.q
        return tuple((c * x) % q for x in a)

    def mul(self, a, b):
        q, r, pbar = self.q, self.r, self.pbar
        t = [0] * (2 * r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    t[i + j] += x * y
        for i in range(2 * r - 2, r - 1, -1):
            c = t[i] % q
            if c:
                off = i - r
                for j in range(r):
                    t[off + j] -= c * pbar[j]
            t[i] = 0
        return tuple(v % q for v in t[:r])

    def inv(self, a):
        f = poly_trim(list(a))
        if not f:
            raise ZeroDivisionError("inverse of zero field element")
        d, u, _ = poly_xgcd(f, list(self.pbar), self.q)
        if d != [1]:
            raise ArithmeticError("modulus not irreducible or element not a unit")
        u = u + [0] * (self.r - len(u))
        return tuple(u[: self.r])

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        res = self.one
        base = a
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    def is_scalar(self, a) -> bool:
        return not any(a[1:])

    def eval_poly(self, f, x):
        """Evaluate a polynomial with F_q coefficients at a field element."""
        acc = self.zero
        for c in reversed(list(f)):
            acc = self.mul(acc, x)
            acc = self.add(acc, self.scalar(c))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.q == other.q
            and self.pbar == other.pbar
        )

    def __repr__(self):
        return f"ExtField(q={self.q}, pbar={list(self.pbar)})"


class FFElem:
    """Element wrapper for ExtField with operator syntax."""

    __slots__ = ("field", "c")

    def __init__(self, field: ExtField, coeffs):
        self.field = field
        c = tuple(x % field.q for x in coeffs)
        if len(c) != field.r:
            c = c + (0,) * (field.r - len(c))
        self.c = c

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.c
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.add(self.c, oc))

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.sub(self.c, oc))

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.sub(oc, self.c))

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.mul(self.c, oc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.mul(self.c, self.field.inv(oc)))

    def __pow__(self, e: int):
        return FFElem(self.field, self.field.pow(self.c, e))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.c))

    def inverse(self):
        return FFElem(self.field, self.field.inv(self.c))

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == self.field.scalar(other)
        return (
            isinstance(other, FFElem)
            and other.field == self.field
            and other.c == self.c
        )

    def __hash__(self):
        return hash((self.field.q, self.field.pbar, self.c))

    def __repr__(self):
        return f"FF(q={self.field.q}, {list(self.c)})"


def numfield_inverse(a, P, q: int | None = None):
    """Inverse of a (coefficient sequence) in Q[X]/(P), or F_q[X]/(P).

    Raises ZeroDivisionError on zero and ArithmeticError when a is not
    a unit (P reducible and a hits a factor).
    """
    f = poly_trim(list(a))
    if not f:
        raise ZeroDivisionError("inverse of zero")
    if q is None:
        f = [Fraction(c) for c in f]
        P = [Fraction(c) for c in P]
    d, u, _ = poly_xgcd(f, list(P), q)
    if poly_deg(d) != 0:
        raise ArithmeticError("element shares a factor with the modulus")
    return u


class NumberField:
    """Q[X]/(P) for monic integer P, elements as coefficient tuples."""

    def __init__(self, P):
        P = [int(c) for c in P]
        if not P or P[-1] != 1:
            raise ValueError("modulus must be monic with integer coefficients")
        self.P = tuple(P)
        self.n = len(P) - 1
        self.zero = (0,) * self.n
        self.one = (1,) + (0,) * (self.n - 1)
        self.gen = ((0, 1) + (0,) * (self.n - 2)) if self.n >= 2 else ((-P[0]),)

    def element(self, coeffs):
        c = list(coeffs)
        if len(c) > self.n:
            c = poly_mod(c, list(self.P))
        c = c + [0] * (self.n - len(c))
        return tuple(c[: self.n])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def smul(self, c, a):
        return tuple(c * x for x in a)

    def mul(self, a, b):
        n = self.n
        t = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    t[i + j] += x * y
        # modulus is monic so reduction stays in the coefficient domain
        P = self.P
        for i in range(2 * n - 2, n - 1, -1):
            c = t[i]
            if c:
                off = i - n
                for j in range(n):
                    t[off + j] -= c * P[j]
                t[i] = 0
        return tuple(t[:n])

    def inv(self, a):
        u = numfield_inverse(a, self.P)
        u = u + [0] * (self.n - len(u))
        return tuple(u[: self.n])

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        res = self.one
        base = a
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    def eval_poly(self, f, x):
        acc = self.zero
        for c in reversed(list(f)):
            acc = self.mul(acc, x)
            acc = self.add(acc, self.element([c]))
        return acc

    def is_zero(self, a) -> bool:
        return not any(a)

    def __repr__(self):
        return f"NumberField(P={list(self.P)})"
