"""Truncated Fock space: finitely many index functions whose values live in
a fixed window, with Laurent polynomial coefficients.

The window is a closed value interval [lo, hi] (stored doubled).  All the
operators downstream either keep values inside the window or raise
WindowOverflow; nothing is dropped silently.  Infinite downward tails of
bar-invariant elements are handled by solving on an enlarged window and
reading answers off the core, never by quiet truncation here.
"""

from itertools import product

from .laurent import LaurentPoly
from .weights import WeightFunction


class WindowOverflow(Exception):
    """An operation produced a value outside the working window."""


class Window:

    __slots__ = ('lo2', 'hi2', 'mode')

    def __init__(self, lo2, hi2, mode):
        if mode not in ('i', 'j'):
            raise ValueError('mode must be i or j')
        want = 1 if mode == 'i' else 0
        if lo2 % 2 != want:
            lo2 += 1
        if hi2 % 2 != want:
            hi2 -= 1
        if lo2 > hi2:
            raise ValueError('empty window')
        self.lo2 = lo2
        self.hi2 = hi2
        self.mode = mode

    @classmethod
    def symmetric(cls, radius2, mode):
        """Window [-r, r] with r given doubled."""
        return cls(-radius2, radius2, mode)

    def values2(self):
        return list(range(self.lo2, self.hi2 + 1, 2))

    def contains_value2(self, v2):
        return self.lo2 <= v2 <= self.hi2

    def contains(self, f):
        return (f.mode == self.mode
                and all(self.contains_value2(v) for v in f.values2))

    def is_symmetric(self):
        return self.lo2 == -self.hi2

    def pad(self, steps):
        """Enlarged window, `steps` extra values at both ends."""
        return Window(self.lo2 - 2 * steps, self.hi2 + 2 * steps, self.mode)

    def all_functions(self, m, n):
        """Every index function on m+n slots with values in the window,
        lexicographic by doubled values."""
        vals = self.values2()
        return [WeightFunction(t, m, self.mode)
                for t in product(vals, repeat=m + n)]

    def __eq__(self, other):
        return (isinstance(other, Window) and self.lo2 == other.lo2
                and self.hi2 == other.hi2 and self.mode == other.mode)

    def __hash__(self):
        return hash((self.lo2, self.hi2, self.mode))

    def __repr__(self):
        def fmt(v):
            return str(v // 2) if v % 2 == 0 else '%d/2' % v
        return 'Window[%s,%s;%s]' % (fmt(self.lo2), fmt(self.hi2), self.mode)


class FockVector:
    """Finite Laurent combination of monomials M_f inside one window."""

    __slots__ = ('window', 'terms')

    def __init__(self, window, terms=None):
        self.window = window
        self.terms = {}
        if terms:
            for f, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly({0: c})
                if c.is_zero():
                    continue
                if not window.contains(f):
                    raise WindowOverflow('%r outside %r' % (f, window))
                if f in self.terms:
                    s = self.terms[f] + c
                    if s.is_zero():
                        del self.terms[f]
                    else:
                        self.terms[f] = s
                else:
                    self.terms[f] = c

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms, key=lambda f: f.sort_key())

    def __add__(self, other):
        if other.window != self.window:
            raise ValueError('window mismatch')
        d = dict(self.terms)
        for f, c in other.terms.items():
            s = d.get(f)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(f, None)
            else:
                d[f] = s
        out = FockVector(self.window)
        out.terms = d
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly({0: c})
        if c.is_zero():
            return FockVector(self.window)
        out = FockVector(self.window)
        out.terms = {f: x * c for f, x in self.terms.items()}
        return out

    def map_coeffs(self, fn):
        out = FockVector(self.window)
        for f, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out.terms[f] = c2
        return out

    def restricted(self, window):
        """The part of the vector supported inside a smaller window."""
        out = FockVector(window)
        for f, c in self.terms.items():
            if window.contains(f):
                out.terms[f] = c
        return out

    def __eq__(self, other):
        return (isinstance(other, FockVector)
                and self.window == other.window and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return 'FockVector(0)'
        bits = ['(%s)*M%r' % (c, f) for f, c in
                sorted(self.terms.items(), key=lambda t: t[0].sort_key())]
        return ' + '.join(bits)


def monomial(f, window):
    if not window.contains(f):
        raise WindowOverflow('%r outside %r' % (f, window))
    v = FockVector(window)
    v.terms[f] = LaurentPoly.one()
    return v


def coefficient(v, f):
    return v.terms.get(f, LaurentPoly())


def embedded(v, window):
    """The same vector viewed in another (usually larger) window."""
    out = FockVector(window)
    for f, c in v.terms.items():
        if not window.contains(f):
            raise WindowOverflow('%r outside %r' % (f, window))
        out.terms[f] = c
    return out
