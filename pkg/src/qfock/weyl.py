"""The group W = (signed permutations of m letters) x (permutations of n
letters), its parabolic subgroups, lengths, and coset combinatorics.

Elements are stored in window notation: `eps` is the tuple of images
(w(1),...,w(m)) as signed integers, `delta` the tuple of images of the
permutation part.  Signed permutations obey w(-i) = -w(i).

Generators are named by string tokens: 'b0' flips the sign in the first
slot, 'a1'..'a{m-1}' are adjacent swaps on the signed part, and
'c1'..'c{n-1}' adjacent swaps on the plain part.

>>> s0 = WeylElement.from_token(2, 0, 'b0')
>>> s1 = WeylElement.from_token(2, 0, 'a1')
>>> (s1 * s0 * s1).eps        # sign flip in the second slot
(1, -2)
>>> length(s1 * s0 * s1)
3
"""

from functools import lru_cache


def _sgn(x):
    return -1 if x < 0 else 1


class WeylElement:

    __slots__ = ('eps', 'delta')

    def __init__(self, eps, delta=()):
        self.eps = tuple(eps)
        self.delta = tuple(delta)

    @property
    def m(self):
        return len(self.eps)

    @property
    def n(self):
        return len(self.delta)

    @classmethod
    def identity(cls, m, n):
        return cls(range(1, m + 1), range(1, n + 1))

    @classmethod
    def from_token(cls, m, n, token):
        eps = list(range(1, m + 1))
        delta = list(range(1, n + 1))
        kind, idx = parse_token(token)
        if kind == 'b':
            if m < 1:
                raise ValueError('b0 needs at least one signed slot')
            eps[0] = -1
        elif kind == 'a':
            if not 1 <= idx <= m - 1:
                raise ValueError('bad token %r for m=%d' % (token, m))
            eps[idx - 1], eps[idx] = eps[idx], eps[idx - 1]
        else:
            if not 1 <= idx <= n - 1:
                raise ValueError('bad token %r for n=%d' % (token, n))
            delta[idx - 1], delta[idx] = delta[idx], delta[idx - 1]
        return cls(eps, delta)

    def apply_eps(self, j):
        """Image of the signed letter j (j may be negative)."""
        return _sgn(j) * self.eps[abs(j) - 1]

    def __mul__(self, other):
        # (self*other)(i) = self(other(i))
        if self.m != other.m or self.n != other.n:
            raise ValueError('size mismatch')
        eps = tuple(self.apply_eps(j) for j in other.eps)
        delta = tuple(self.delta[j - 1] for j in other.delta)
        return WeylElement(eps, delta)

    def inverse(self):
        eps = [0] * self.m
        for i, j in enumerate(self.eps, 1):
            eps[abs(j) - 1] = _sgn(j) * i
        delta = [0] * self.n
        for i, j in enumerate(self.delta, 1):
            delta[j - 1] = i
        return WeylElement(eps, delta)

    def is_identity(self):
        return (self.eps == tuple(range(1, self.m + 1))
                and self.delta == tuple(range(1, self.n + 1)))

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.eps == other.eps and self.delta == other.delta)

    def __hash__(self):
        return hash((self.eps, self.delta))

    def __repr__(self):
        return 'WeylElement(%r, %r)' % (list(self.eps), list(self.delta))


def parse_token(token):
    """'b0' -> ('b', 0), 'a3' -> ('a', 3), 'c1' -> ('c', 1)."""
    kind, num = token[0], token[1:]
    if kind not in 'bac' or not num.isdigit():
        raise ValueError('bad generator token %r' % (token,))
    idx = int(num)
    if kind == 'b' and idx != 0:
        raise ValueError('bad generator token %r' % (token,))
    return kind, idx


def all_tokens(m, n):
    toks = []
    if m >= 1:
        toks.append('b0')
    toks += ['a%d' % i for i in range(1, m)]
    toks += ['c%d' % k for k in range(1, n)]
    return toks


def length(w):
    """Coxeter length.

    On the signed part this counts inversions of the window (w(1),...,w(m))
    plus sum of |w(i)| over the negative entries; on the plain part it
    counts inversions.  Checked against Cayley-graph distance in the tests.

    >>> length(WeylElement((-1, -2), ()))
    4
    """
    e = w.eps
    inv = sum(1 for i in range(len(e)) for j in range(i + 1, len(e))
              if e[i] > e[j])
    neg = sum(-v for v in e if v < 0)
    d = w.delta
    invd = sum(1 for i in range(len(d)) for j in range(i + 1, len(d))
               if d[i] > d[j])
    return inv + neg + invd


class ParabolicDatum:
    """A standard parabolic subgroup of W, given by a set of generator
    tokens.  Factors through connected components of the Dynkin diagram:
    a component containing 'b0' has type B, all others type A.
    """

    def __init__(self, m, n, tokens=()):
        self.m = m
        self.n = n
        toks = frozenset(tokens)
        for t in toks:
            parse_token(t)            # validates shape
            WeylElement.from_token(m, n, t)   # validates range
        self.tokens = toks
        self._elements = None

    @property
    def generators(self):
        return self.tokens

    def factor_decomposition(self):
        """List of (type, rank, slots) triples, one per factor.

        slots is the tuple of 1-based slot indices (on the eps side for
        'A'/'B' factors living there, on the delta side for the rest).
        """
        facs = []
        # eps side: vertices are b0 ~ 0 and a_i ~ i on a path 0-1-...-(m-1)
        verts = sorted({0 if t == 'b0' else int(t[1:])
                        for t in self.tokens if t[0] in 'ba'})
        comp = []
        for v in verts:
            if comp and v == comp[-1] + 1:
                comp.append(v)
            else:
                if comp:
                    facs.append(self._eps_factor(comp))
                comp = [v]
        if comp:
            facs.append(self._eps_factor(comp))
        cverts = sorted(int(t[1:]) for t in self.tokens if t[0] == 'c')
        comp = []
        for v in cverts:
            if comp and v == comp[-1] + 1:
                comp.append(v)
            else:
                if comp:
                    facs.append(('A', len(comp), tuple(range(comp[0], comp[-1] + 2)), 'delta'))
                comp = [v]
        if comp:
            facs.append(('A', len(comp), tuple(range(comp[0], comp[-1] + 2)), 'delta'))
        return facs

    def _eps_factor(self, comp):
        if comp[0] == 0:
            # B factor on slots 1..k+1 where k = last a-index in component
            rank = len(comp)
            return ('B', rank, tuple(range(1, rank + 1)), 'eps')
        return ('A', len(comp), tuple(range(comp[0], comp[-1] + 2)), 'eps')

    def exponents(self):
        """Exponents of the factors, concatenated.

        Type A_r contributes 1..r, type B_r contributes 1,3,...,2r-1.
        """
        out = []
        for typ, rank, _, _ in self.factor_decomposition():
            if typ == 'B':
                out += [2 * i - 1 for i in range(1, rank + 1)]
            else:
                out += list(range(1, rank + 1))
        return out

    def elements(self):
        """dict w -> (length, reduced word), BFS over the Cayley graph."""
        if self._elements is None:
            toks = sorted(self.tokens)
            e = WeylElement.identity(self.m, self.n)
            found = {e: (0, ())}
            frontier = [e]
            while frontier:
                nxt = []
                for w in frontier:
                    lw, word = found[w]
                    for t in toks:
                        ws = w * WeylElement.from_token(self.m, self.n, t)
                        if ws not in found:
                            found[ws] = (lw + 1, word + (t,))
                            nxt.append(ws)
                frontier = nxt
            self._elements = found
        return self._elements

    def order(self):
        return len(self.elements())

    def longest_element(self):
        els = self.elements()
        return max(els, key=lambda w: els[w][0])

    def word(self, w):
        return self.elements()[w][1]

    def __repr__(self):
        return 'ParabolicDatum(%d, %d, %r)' % (self.m, self.n, sorted(self.tokens))

    def __eq__(self, other):
        return (isinstance(other, ParabolicDatum) and self.m == other.m
                and self.n == other.n and self.tokens == other.tokens)

    def __hash__(self):
        return hash((self.m, self.n, self.tokens))


@lru_cache(maxsize=None)
def full_group(m, n):
    return ParabolicDatum(m, n, all_tokens(m, n))


def longest_element(m, n):
    """Longest element of the full group: -id on the signed part, the
    reversal on the plain part."""
    return WeylElement([-i for i in range(1, m + 1)], range(n, 0, -1))


def antidominant_rep(f, datum):
    """(f_minus, tau): the datum-antidominant point of the orbit f.W and
    the minimal-length tau in the datum with f.tau = f_minus.

    Works for any index function f providing .act_token and .cmp_at.
    """
    els = datum.elements()
    for w in sorted(els, key=lambda w: (els[w][0], w.eps, w.delta)):
        g = f
        for t in els[w][1]:
            g = g.act_token(t)
        if g.is_antidominant(datum.tokens):
            return g, w
    raise AssertionError('orbit of %r has no antidominant point' % (f,))


def stabilizer(f, datum):
    """Stabilizer of a datum-antidominant f as a standard parabolic.

    Raises ValueError if f is not antidominant for the datum (the
    stabilizer need not be standard there).
    """
    if not f.is_antidominant(datum.tokens):
        raise ValueError('stabilizer requires an antidominant index function')
    fixed = {t for t in datum.tokens if f.cmp_at(t) == 'fixed'}
    return ParabolicDatum(datum.m, datum.n, fixed)


def shortest_coset_reps(f, datum):
    """Shortest representatives of Stab(f)\\W_datum for antidominant f,
    as a list of (w, length) pairs, lengths weakly increasing.
    """
    if not f.is_antidominant(datum.tokens):
        raise ValueError('coset reps start from an antidominant index function')
    els = datum.elements()
    seen = {}
    out = []
    for w in sorted(els, key=lambda w: (els[w][0], w.eps, w.delta)):
        g = f
        for t in els[w][1]:
            g = g.act_token(t)
        if g not in seen:
            seen[g] = w
            out.append((w, els[w][0]))
    return out


if __name__ == '__main__':
    import doctest
    doctest.testmod()
