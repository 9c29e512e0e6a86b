"""Laurent polynomials in one variable q with exact integer (or rational)
coefficients.

Everything downstream works over Z[q,q^-1], so this module deliberately
avoids floats.  A polynomial is stored as a dict {exponent: coefficient}
with zero coefficients dropped.

>>> q = LaurentPoly.q()
>>> (q + q**-1)**2
LaurentPoly({-2: 1, 0: 2, 2: 1})
>>> bar(q - q**-1)
LaurentPoly({-1: 1, 1: -1})
"""

from fractions import Fraction


class NotDivisible(ArithmeticError):
    """Raised when an exact division in Z[q,q^-1] fails."""


def _normcoeff(c):
    # keep ints as ints, collapse integral Fractions back to int
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:

    __slots__ = ('c',)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                c = _normcoeff(c)
                if c:
                    d[int(e)] = d.get(int(e), 0) + c
        self.c = {e: c for e, c in d.items() if c}

    @classmethod
    def q(cls, exp=1, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == {0: 1}

    def coeff(self, e):
        return self.c.get(e, 0)

    def degree(self):
        # max exponent, None for 0
        return max(self.c) if self.c else None

    def valuation(self):
        return min(self.c) if self.c else None

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self.c)
        for e, c in other.c.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self.c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = {}
        for e1, c1 in self.c.items():
            for e2, c2 in other.c.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            # only monomials are invertible
            if len(self.c) != 1:
                raise NotDivisible('negative power of a non-monomial')
            (e, c), = self.c.items()
            if c not in (1, -1):
                raise NotDivisible('non-unit coefficient')
            return LaurentPoly({-e: c}) ** (-k)
        out = LaurentPoly.one()
        b = self
        while k:
            if k & 1:
                out = out * b
            b = b * b
            k >>= 1
        return out

    def shifted(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.c.items()})

    def pairs(self):
        """List [exponent, coefficient] pairs, exponent-sorted (JSON form)."""
        return [[e, self.c[e]] for e in sorted(self.c)]

    @classmethod
    def from_pairs(cls, pairs):
        return cls({int(e): c for e, c in pairs})

    def __repr__(self):
        return 'LaurentPoly(%r)' % ({e: self.c[e] for e in sorted(self.c)},)

    def __str__(self):
        if not self.c:
            return '0'
        bits = []
        for e in sorted(self.c, reverse=True):
            c = self.c[e]
            if e == 0:
                term = str(c)
            else:
                qq = 'q' if e == 1 else ('q^%d' % e)
                if c == 1:
                    term = qq
                elif c == -1:
                    term = '-' + qq
                else:
                    term = '%s*%s' % (c, qq)
            if bits and not term.startswith('-'):
                bits.append('+')
            bits.append(term)
        return ''.join(bits)


def bar(p):
    """Bar involution q -> q^-1.

    >>> str(bar(LaurentPoly({2: 1, 0: 3})))
    '3+q^-2'
    """
    return LaurentPoly({-e: c for e, c in p.c.items()})


def quantum_integer(s):
    """[s] = (q^s - q^-s)/(q - q^-1), so [2] = q + q^-1.

    >>> str(quantum_integer(3))
    'q^2+1+q^-2'
    >>> quantum_integer(-2) == -quantum_integer(2)
    True
    """
    if s == 0:
        return LaurentPoly()
    if s < 0:
        return -quantum_integer(-s)
    return LaurentPoly({e: 1 for e in range(1 - s, s, 2)})


def poincare_bracket(arg):
    """[W] = prod_i [e_i + 1] over the exponents e_i of a finite Weyl group.

    `arg` is either something with an .exponents() method (a parabolic
    datum) or a plain iterable of exponents.

    >>> str(poincare_bracket([1]))        # A1: [2]
    'q+q^-1'
    >>> poincare_bracket([1, 3]) == quantum_integer(2)*quantum_integer(4)
    True
    """
    exps = arg.exponents() if hasattr(arg, 'exponents') else list(arg)
    out = LaurentPoly.one()
    for e in exps:
        out = out * quantum_integer(e + 1)
    return out


def divide_exact(a, b):
    """Exact division a/b in Laurent polynomials; raises NotDivisible.

    >>> p = quantum_integer(2) * quantum_integer(3)
    >>> divide_exact(p, quantum_integer(3)) == quantum_integer(2)
    True
    """
    if b.is_zero():
        raise NotDivisible('division by zero')
    if a.is_zero():
        return LaurentPoly()
    # shift away the valuations, then ordinary polynomial division over Q
    va, vb = a.valuation(), b.valuation()
    num = {e - va: Fraction(c) for e, c in a.c.items()}
    den = {e - vb: Fraction(c) for e, c in b.c.items()}
    dd = max(den)
    lead = den[dd]
    quo = {}
    while num:
        dn = max(num)
        if dn < dd:
            raise NotDivisible('%r not divisible by %r' % (a, b))
        k = dn - dd
        f = num[dn] / lead
        quo[k] = f
        for e, c in den.items():
            num[e + k] = num.get(e + k, Fraction(0)) - f * c
            if not num[e + k]:
                del num[e + k]
    return LaurentPoly({e + va - vb: c for e, c in quo.items()})


def eval_at_one(p):
    """Specialize q = 1.

    >>> eval_at_one(quantum_integer(5))
    5
    """
    return _normcoeff(sum(p.c.values(), 0))


if __name__ == '__main__':
    import doctest
    doctest.testmod()
