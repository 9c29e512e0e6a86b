"""Right Hecke algebra action on the truncated Fock space, the algebra
itself in its regular representation, and the q-symmetrizers.

Generators satisfy (H_s - q^-1)(H_s + q) = 0.  On a monomial M_f the
generator attached to a token acts by the usual three cases: eigenvalue
q^-1 on the wall, a plain move from the antidominant side, and a move
plus (q^-1 - q)M_f from the other side.  With values x = f at the two
slots involved:

    a_i (eps slots i, i+1):   x == y : q^-1 M_f
                              x <  y : M_{f.s}
                              x >  y : M_{f.s} + (q^-1 - q) M_f
    b0  (first eps slot):     x == 0 : q^-1 M_f      (mode j only)
                              x >  0 : M_{f.s}
                              x <  0 : M_{f.s} + (q^-1 - q) M_f
    c_k (delta slots k, k+1): x == y : q^-1 M_f
                              x >  y : M_{f.s}
                              x <  y : M_{f.s} + (q^-1 - q) M_f

Note the delta side is antidominant when weakly decreasing; this is forced
by the negative-definite form on the d's.
"""

from .laurent import LaurentPoly, bar as lbar
from .fock import FockVector
from . import weyl

Q = LaurentPoly.q()
QI = LaurentPoly.q(-1)
# q^-1 - q, the coefficient picked up on the non-antidominant side
DOWN = LaurentPoly({-1: 1, 1: -1})


def _gen_case(f, token):
    """('fixed'|'lower'|'upper', f.s) where 'lower' means f is on the
    antidominant side of the wall."""
    c = f.cmp_at(token)
    if c == 'fixed':
        return 'fixed', f
    fs = f.act_token(token)
    # cmp 'ascend' means f.s is strictly higher, so f is the lower one
    return ('lower' if c == 'ascend' else 'upper'), fs


def act_generator(v, token, perturb=False):
    """v . H_token for a FockVector v."""
    out = FockVector(v.window)
    for f, c in v.terms.items():
        case, fs = _gen_case(f, token)
        if case == 'fixed':
            _accum(out, f, c * QI)
        elif case == 'lower':
            _accum(out, fs, c)
        else:
            _accum(out, fs, c)
            coef = DOWN if not perturb else -DOWN
            _accum(out, f, c * coef)
    return out


def _accum(v, f, c):
    if c.is_zero():
        return
    if not v.window.contains(f):
        from .fock import WindowOverflow
        raise WindowOverflow('%r outside %r' % (f, v.window))
    s = v.terms.get(f)
    s = c if s is None else s + c
    if s.is_zero():
        v.terms.pop(f, None)
    else:
        v.terms[f] = s


def act_word(v, tokens, perturb=False):
    for t in tokens:
        v = act_generator(v, t, perturb)
    return v


def act_generator_bar(v, token):
    """v . (H_token + (q - q^-1)), the bar of the generator."""
    return act_generator(v, token) + v.scaled(-DOWN)


def act_word_bar(v, tokens):
    for t in tokens:
        v = act_generator_bar(v, t)
    return v


class HeckeElement:
    """Element of the Hecke algebra of W_{B_m} x S_n, as a dict
    {WeylElement: LaurentPoly} over the standard basis H_w."""

    __slots__ = ('m', 'n', 'terms')

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        self.terms = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly({0: c})
                if not c.is_zero():
                    self.terms[w] = self.terms.get(w, LaurentPoly()) + c
            self.terms = {w: c for w, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def unit(cls, m, n):
        return cls(m, n, {weyl.WeylElement.identity(m, n): LaurentPoly.one()})

    @classmethod
    def generator(cls, m, n, token):
        return cls(m, n, {weyl.WeylElement.from_token(m, n, token): LaurentPoly.one()})

    def mul_generator(self, token):
        """Right multiplication by H_token in the regular representation:
        H_w H_s = H_{ws} if the length goes up, else H_{ws}+(q^-1-q)H_w."""
        s = weyl.WeylElement.from_token(self.m, self.n, token)
        d = {}
        for w, c in self.terms.items():
            ws = w * s
            if weyl.length(ws) > weyl.length(w):
                _hadd(d, ws, c)
            else:
                _hadd(d, ws, c)
                _hadd(d, w, c * DOWN)
        return HeckeElement(self.m, self.n, d)

    def mul_word(self, tokens):
        h = self
        for t in tokens:
            h = h.mul_generator(t)
        return h

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            grp = weyl.full_group(self.m, self.n)
            out = HeckeElement(self.m, self.n)
            d = {}
            for w, c in other.terms.items():
                piece = self.mul_word(grp.word(w))
                for u, cu in piece.terms.items():
                    _hadd(d, u, cu * c)
            return HeckeElement(self.m, self.n, d)
        if isinstance(other, (int, LaurentPoly)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c):
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly({0: c})
        return HeckeElement(self.m, self.n,
                            {w: x * c for w, x in self.terms.items()})

    def __add__(self, other):
        d = dict(self.terms)
        for w, c in other.terms.items():
            _hadd(d, w, c)
        return HeckeElement(self.m, self.n, d)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def bar(self):
        """Bar involution: q -> q^-1, H_w -> (H_{w^-1})^-1, computed from a
        reduced word since bar(H_s) = H_s + (q - q^-1)."""
        grp = weyl.full_group(self.m, self.n)
        out = HeckeElement(self.m, self.n)
        for w, c in self.terms.items():
            piece = HeckeElement.unit(self.m, self.n)
            for t in grp.word(w):
                piece = piece.mul_generator(t) + piece.scaled(-DOWN)
            out = out + piece.scaled(lbar(c))
        return out

    def coefficient(self, w):
        return self.terms.get(w, LaurentPoly())

    def __eq__(self, other):
        return (isinstance(other, HeckeElement) and self.m == other.m
                and self.n == other.n and self.terms == other.terms)

    def __repr__(self):
        bits = ['(%s)*H%r%r' % (c, list(w.eps), list(w.delta))
                for w, c in sorted(self.terms.items(),
                                   key=lambda t: (t[0].eps, t[0].delta))]
        return ' + '.join(bits) if bits else 'HeckeElement(0)'


def _hadd(d, w, c):
    s = d.get(w)
    s = c if s is None else s + c
    if s.is_zero():
        d.pop(w, None)
    else:
        d[w] = s


def symmetrizer_element(datum):
    """S = sum_sigma q^{l(w0) - l(sigma)} H_sigma over the parabolic."""
    els = datum.elements()
    lmax = max(l for l, _ in els.values())
    return HeckeElement(datum.m, datum.n,
                        {w: LaurentPoly.q(lmax - l) for w, (l, _) in els.items()})


def q_symmetrizer_apply(v, datum):
    """v . S_datum on the Fock space."""
    els = datum.elements()
    lmax = max(l for l, _ in els.values())
    out = FockVector(v.window)
    for w, (l, word) in els.items():
        out = out + act_word(v, word).scaled(LaurentPoly.q(lmax - l))
    return out


def verify_relations(m, n, window, nrandom=25, seed=0, perturb=False):
    """Check the quadratic, braid, and commutation relations of the Hecke
    action on every monomial, plus bar-compatibility spot checks on random
    vectors.  Returns a report dict; report['ok'] is the overall verdict,
    and each failing relation records one counterexample."""
    import random
    from .fock import monomial

    rng = random.Random(seed)
    toks = weyl.all_tokens(m, n)
    fs = window.all_functions(m, n)
    report = {'ok': True, 'checks': {}}

    def record(name, ok, ce=None):
        report['checks'][name] = {'ok': ok, 'counterexample': ce}
        if not ok:
            report['ok'] = False

    # quadratic relation: H_s^2 = 1 + (q^-1 - q) H_s
    for t in toks:
        bad = None
        for f in fs:
            v = monomial(f, window)
            lhs = act_word(v, (t, t), perturb)
            rhs = v + act_generator(v, t, perturb).scaled(DOWN)
            if lhs != rhs:
                bad = repr(f)
                break
        record('quadratic %s' % t, bad is None, bad)

    # braid-type relations between pairs of generators
    for w1, w2 in _braid_pairs(m, n):
        bad = None
        for f in fs:
            v = monomial(f, window)
            if act_word(v, w1, perturb) != act_word(v, w2, perturb):
                bad = repr(f)
                break
        record('braid %s=%s' % ('.'.join(w1), '.'.join(w2)), bad is None, bad)

    # H_s (H_s + (q - q^-1)) = 1, on random multi-term vectors
    for k in range(nrandom):
        v = FockVector(window)
        for _ in range(3):
            f = rng.choice(fs)
            c = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
            v = v + monomial(f, window).scaled(c)
        t = rng.choice(toks)
        if act_generator(act_generator_bar(v, t), t, perturb) != v:
            record('inverse sample %d' % k, False, t)
            break
    else:
        record('inverse samples', True)

    return report


def _braid_pairs(m, n):
    """All defining pair relations among generator tokens."""
    toks = weyl.all_tokens(m, n)
    pairs = []
    for i, s in enumerate(toks):
        for t in toks[i + 1:]:
            (ks, xs), (kt, xt) = weyl.parse_token(s), weyl.parse_token(t)
            if ks == 'b' and kt == 'a' and xt == 1:
                pairs.append(((s, t) * 2, (t, s) * 2))      # m_{b0,a1} = 4
            elif ks == kt == 'a' and abs(xs - xt) == 1:
                pairs.append(((s, t, s), (t, s, t)))
            elif ks == kt == 'c' and abs(xs - xt) == 1:
                pairs.append(((s, t, s), (t, s, t)))
            else:
                pairs.append(((s, t), (t, s)))
    return pairs
