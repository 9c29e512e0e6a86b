"""Weights and index functions for osp(2m+1|2n) with the anti-distinguished
simple system

    -e_1, e_1-e_2, ..., e_{m-1}-e_m, e_m-d_1, d_1-d_2, ..., d_{n-1}-d_n.

The bilinear form has (e_i,e_j) = delta_ij and (d_k,d_l) = -delta_kl.
A weight lam is encoded by the index function f with

    f(i)    = (lam+rho, e_i)   = lam_i + 1/2 - i          (slots 1..m)
    f(bar k)= (lam+rho, d_k)   = -(mu_k + m - k + 1/2)    (slots m+1..m+n)

Integer weights give half-integer f values (mode 'i'), half-integer
weights give integer f values (mode 'j').  All values are stored doubled,
as ints, so no floats anywhere.
"""

from fractions import Fraction

HALF = Fraction(1, 2)


class UnsupportedWeightClass(ValueError):
    """Weight is neither integral nor half-integral in every coordinate."""


class Weight:
    """A weight, as rational coordinate tuples along the e's and d's."""

    __slots__ = ('eps', 'delta')

    def __init__(self, eps, delta=()):
        self.eps = tuple(Fraction(x) for x in eps)
        self.delta = tuple(Fraction(x) for x in delta)

    @property
    def m(self):
        return len(self.eps)

    @property
    def n(self):
        return len(self.delta)

    def __add__(self, other):
        return Weight([a + b for a, b in zip(self.eps, other.eps)],
                      [a + b for a, b in zip(self.delta, other.delta)])

    def __sub__(self, other):
        return Weight([a - b for a, b in zip(self.eps, other.eps)],
                      [a - b for a, b in zip(self.delta, other.delta)])

    def __eq__(self, other):
        return (isinstance(other, Weight)
                and self.eps == other.eps and self.delta == other.delta)

    def __hash__(self):
        return hash((self.eps, self.delta))

    def __repr__(self):
        fmt = lambda xs: ','.join(str(x) for x in xs)
        return 'Weight(%s ; %s)' % (fmt(self.eps), fmt(self.delta))


class RootDatum:
    """Root combinatorics of osp(2m+1|2n) for the simple system above."""

    def __init__(self, m, n):
        self.m = m
        self.n = n
        E = lambda i: tuple(1 if j == i else 0 for j in range(1, m + 1))
        D = lambda k: tuple(1 if j == k else 0 for j in range(1, n + 1))
        zE = tuple([0] * m)
        zD = tuple([0] * n)
        add = lambda a, b: tuple(x + y for x, y in zip(a, b))
        neg = lambda a: tuple(-x for x in a)

        simple = []
        if m >= 1:
            simple.append((neg(E(1)), zD))
        for i in range(1, m):
            simple.append((add(E(i), neg(E(i + 1))), zD))
        if m >= 1 and n >= 1:
            simple.append((E(m), neg(D(1))))
        elif m == 0:
            raise ValueError('root datum needs at least one eps slot')
        for k in range(1, n):
            simple.append((zE, add(D(k), neg(D(k + 1)))))
        self.simple_roots = simple

        even_pos, odd_pos = [], []
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                even_pos.append((add(E(i), neg(E(j))), zD))
                even_pos.append((add(neg(E(i)), neg(E(j))), zD))
            even_pos.append((neg(E(i)), zD))
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                even_pos.append((zE, add(D(k), neg(D(l)))))
                even_pos.append((zE, add(neg(D(k)), neg(D(l)))))
            even_pos.append((zE, neg(add(D(k), D(k)))))
            odd_pos.append((zE, neg(D(k))))
        for i in range(1, m + 1):
            for k in range(1, n + 1):
                odd_pos.append((E(i), neg(D(k))))
                odd_pos.append((neg(E(i)), neg(D(k))))
        self.even_positive_roots = even_pos
        self.odd_positive_roots = odd_pos
        self.positive_roots = even_pos + odd_pos

        # even simple system: type B on the eps side, type C on the delta side
        ev = []
        if m >= 1:
            ev.append((neg(E(1)), zD))
        for i in range(1, m):
            ev.append((add(E(i), neg(E(i + 1))), zD))
        if n >= 1:
            ev.append((zE, neg(add(D(1), D(1)))))
        for k in range(1, n):
            ev.append((zE, add(D(k), neg(D(k + 1)))))
        self.even_simple_roots = ev

        self.rho = Weight([HALF - i for i in range(1, m + 1)],
                          [m - k + HALF for k in range(1, n + 1)])
        self.rho0 = Weight([HALF - i for i in range(1, m + 1)],
                           [-k for k in range(1, n + 1)])

    def pairing(self, a, b):
        """Bilinear form; arguments are Weights or (eps,delta) coefficient
        pairs.  The d-block is negative definite."""
        ae, ad = (a.eps, a.delta) if isinstance(a, Weight) else a
        be, bd = (b.eps, b.delta) if isinstance(b, Weight) else b
        s = sum(x * y for x, y in zip(ae, be))
        s -= sum(x * y for x, y in zip(ad, bd))
        return s

    def token_root(self, token):
        """The even simple root attached to a generator token."""
        m, n = self.m, self.n
        kind = token[0]
        idx = int(token[1:])
        E = lambda i: tuple(1 if j == i else 0 for j in range(1, m + 1))
        D = lambda k: tuple(1 if j == k else 0 for j in range(1, n + 1))
        zE, zD = tuple([0] * m), tuple([0] * n)
        if kind == 'b':
            return (tuple(-x for x in E(1)), zD)
        if kind == 'a':
            return (tuple(x - y for x, y in zip(E(idx), E(idx + 1))), zD)
        return (zE, tuple(x - y for x, y in zip(D(idx), D(idx + 1))))

    def reflect(self, root, lam):
        """s_root(lam) for an even root, via the form."""
        rr = self.pairing(root, root)
        c = 2 * self.pairing(lam, root) / rr
        re, rd = root
        return Weight([x - c * r for x, r in zip(lam.eps, re)],
                      [x - c * r for x, r in zip(lam.delta, rd)])


class WeightFunction:
    """Index function with doubled integer values; mode 'i' means all
    doubled values odd, 'j' all even."""

    __slots__ = ('values2', 'm', 'mode')

    def __init__(self, values2, m, mode):
        values2 = tuple(int(v) for v in values2)
        if mode not in ('i', 'j'):
            raise ValueError('mode must be i or j')
        want = 1 if mode == 'i' else 0
        if any(v % 2 != want for v in values2):
            raise UnsupportedWeightClass('values do not match mode %r' % mode)
        self.values2 = values2
        self.m = m
        self.mode = mode

    @property
    def n(self):
        return len(self.values2) - self.m

    def value(self, slot):
        """Value as a Fraction; slot is 0-based over the m+n positions."""
        return Fraction(self.values2[slot], 2)

    def eps_values2(self):
        return self.values2[:self.m]

    def delta_values2(self):
        return self.values2[self.m:]

    def act(self, w):
        """Right position action (f.w)(i) = f(w(i)), with f(-i) = -f(i) on
        the signed slots."""
        vals = list(self.values2)
        for i, j in enumerate(w.eps):
            vals[i] = (1 if j > 0 else -1) * self.values2[abs(j) - 1]
        for k, l in enumerate(w.delta):
            vals[self.m + k] = self.values2[self.m + l - 1]
        return WeightFunction(vals, self.m, self.mode)

    def act_token(self, token):
        kind, idx = token[0], int(token[1:])
        vals = list(self.values2)
        if kind == 'b':
            vals[0] = -vals[0]
        elif kind == 'a':
            vals[idx - 1], vals[idx] = vals[idx], vals[idx - 1]
        else:
            i = self.m + idx - 1
            vals[i], vals[i + 1] = vals[i + 1], vals[i]
        return WeightFunction(vals, self.m, self.mode)

    def cmp_at(self, token):
        """'fixed' / 'ascend' / 'descend': position of f relative to f.s.

        'descend' means f.s is strictly lower (closer to antidominant),
        i.e. f sits on the non-antidominant side of the wall.
        """
        kind, idx = token[0], int(token[1:])
        if kind == 'b':
            x = self.values2[0]
            if x == 0:
                return 'fixed'
            return 'descend' if x < 0 else 'ascend'
        if kind == 'a':
            x, y = self.values2[idx - 1], self.values2[idx]
            if x == y:
                return 'fixed'
            return 'descend' if x > y else 'ascend'
        x, y = self.values2[self.m + idx - 1], self.values2[self.m + idx]
        if x == y:
            return 'fixed'
        return 'descend' if x < y else 'ascend'

    def is_antidominant(self, tokens):
        return all(self.cmp_at(t) != 'descend' for t in tokens)

    def __eq__(self, other):
        return (isinstance(other, WeightFunction) and self.m == other.m
                and self.mode == other.mode and self.values2 == other.values2)

    def __hash__(self):
        return hash((self.values2, self.m, self.mode))

    def sort_key(self):
        return self.values2

    def __repr__(self):
        def fmt(v):
            return str(v // 2) if v % 2 == 0 else '%d/2' % v
        e = ','.join(fmt(v) for v in self.values2[:self.m])
        d = ','.join(fmt(v) for v in self.values2[self.m:])
        return '(%s;%s)' % (e, d)


def f_from_lambda(lam, rd):
    """Index function of a weight; raises UnsupportedWeightClass unless the
    weight is integral or half-integral in all coordinates."""
    den = {x.denominator for x in lam.eps} | {x.denominator for x in lam.delta}
    if den <= {1}:
        mode = 'i'
    elif den <= {1, 2} and all(x.denominator == 2 for x in lam.eps) \
            and all(x.denominator == 2 for x in lam.delta):
        mode = 'j'
    else:
        raise UnsupportedWeightClass('weight %r is neither integral nor '
                                     'half-integral' % (lam,))
    shifted = lam + rd.rho
    vals2 = [2 * x for x in shifted.eps] + [-2 * x for x in shifted.delta]
    return WeightFunction([int(v) for v in vals2], rd.m, mode)


def lambda_from_f(f, rd):
    eps = [Fraction(v, 2) - HALF + i
           for i, v in enumerate(f.values2[:f.m], 1)]
    delta = [-Fraction(v, 2) - rd.m + k - HALF
             for k, v in enumerate(f.values2[f.m:], 1)]
    return Weight(eps, delta)


def dot_action(w, lam, rd):
    """w . lam = w(lam + rho0) - rho0."""
    s = lam + rd.rho0
    eps = [Fraction(0)] * rd.m
    for i, j in enumerate(w.eps, 1):
        # coefficient of e_i goes to position |j| with the sign of j
        eps[abs(j) - 1] = (1 if j > 0 else -1) * s.eps[i - 1]
    delta = [Fraction(0)] * rd.n
    for k, l in enumerate(w.delta, 1):
        delta[l - 1] = s.delta[k - 1]
    return Weight(eps, delta) - rd.rho0


def simple_coordinates(diff, rd):
    """Coordinates of a weight in the basis of simple roots, as Fractions.

    Solved by Gaussian elimination; the simple roots are a basis of the
    weight space whenever m >= 1.
    """
    cols = rd.simple_roots
    nv = len(cols)
    rows = rd.m + rd.n
    if nv != rows:
        raise ValueError('simple system is not a basis here')
    A = [[Fraction(cols[c][0][r]) for c in range(nv)] for r in range(rd.m)] + \
        [[Fraction(cols[c][1][r]) for c in range(nv)] for r in range(rd.n)]
    b = [Fraction(x) for x in diff.eps] + [Fraction(x) for x in diff.delta]
    # forward elimination with partial pivot by first nonzero
    piv = []
    for c in range(nv):
        p = next((r for r in range(len(piv), rows) if A[r][c]), None)
        if p is None:
            raise ValueError('singular simple system')
        r0 = len(piv)
        A[r0], A[p] = A[p], A[r0]
        b[r0], b[p] = b[p], b[r0]
        for r in range(r0 + 1, rows):
            if A[r][c]:
                fct = A[r][c] / A[r0][c]
                for cc in range(c, nv):
                    A[r][cc] -= fct * A[r0][cc]
                b[r] -= fct * b[r0]
        piv.append(c)
    x = [Fraction(0)] * nv
    for r in range(nv - 1, -1, -1):
        s = b[r] - sum(A[r][c] * x[c] for c in range(r + 1, nv))
        x[r] = s / A[r][r]
    return x


def bruhat_leq(g, f, rd):
    """True iff lam_f - lam_g is a nonnegative integer combination of
    positive roots.  Since every positive root is an N-combination of
    simple roots and conversely, this is a coordinate check in the simple
    basis."""
    lg = lambda_from_f(g, rd) if isinstance(g, WeightFunction) else g
    lf = lambda_from_f(f, rd) if isinstance(f, WeightFunction) else f
    coords = simple_coordinates(lf - lg, rd)
    return all(x.denominator == 1 and x >= 0 for x in coords)


def is_antidominant_zeta(lam, datum, rd):
    """W_zeta-antidominance: (lam+rho0, alpha^vee) is not a positive
    integer, for each simple root alpha of the datum."""
    s = lam + rd.rho0
    for t in sorted(datum.tokens):
        root = rd.token_root(t)
        rr = rd.pairing(root, root)
        c = 2 * rd.pairing(s, root) / rr
        if c.denominator == 1 and c > 0:
            return False
    return True


def is_typical(x, rd=None):
    """No eps-slot value coincides, up to sign, with a delta-slot value of
    the index function (equivalently (lam+rho, alpha) != 0 for all odd
    isotropic roots alpha)."""
    if isinstance(x, Weight):
        if rd is None:
            rd = RootDatum(x.m, x.n)
        x = f_from_lambda(x, rd)
    ev = {abs(v) for v in x.values2[:x.m]}
    dv = {abs(v) for v in x.values2[x.m:]}
    return not (ev & dv)
