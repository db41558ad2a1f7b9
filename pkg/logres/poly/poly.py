# -*-  coding: utf-8 -*-
"""
Exact multivariate polynomials over the rationals.

A :class:`Poly` is an immutable map from exponent tuples of a fixed length
``n`` to nonzero :class:`fractions.Fraction` coefficients.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from fractions import Fraction

import six
import sympy
from sympy.polys.monomials import monomial_div, monomial_mul

from logres.lib.exceptions import VariableIndexError
from logres.poly.orders import DEGREVLEX, LEX


def _fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, sympy.Rational):
        return Fraction(int(c.p), int(c.q))
    return Fraction(c)


class Poly(object):
    """
    Polynomial in ``n`` variables with rational coefficients.

    Instances are never mutated after construction; every operation returns
    a new value, so polynomials can be shared between threads freely.
    """
    __slots__ = ('n', 'terms', '_hash')

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for exp, c in six.iteritems(terms or {}):
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError("exponent %s does not have length %d" % (exp, n))
            c = _fraction(c)
            if c:
                clean[exp] = c
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n, i):
        if not 0 <= i < n:
            raise VariableIndexError("variable index %s out of range for %d variables" % (i, n))
        exp = [0] * n
        exp[i] = 1
        return cls(n, {tuple(exp): 1})

    @classmethod
    def monomial(cls, n, exp, c=1):
        return cls(n, {tuple(exp): c})

    @classmethod
    def _raw(cls, n, terms):
        # terms already clean
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    # inspection

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self):
        """Total degree, ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def order(self):
        """Lowest total degree of a term (order of vanishing at 0), None for zero."""
        return min((sum(e) for e in self.terms), default=None)

    @property
    def constant_term(self):
        return self.terms.get((0,) * self.n, Fraction(0))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_unit_local(self):
        """True iff the polynomial is a unit of the local ring at the origin."""
        return self.constant_term != 0

    def is_homogeneous(self):
        return len(set(sum(e) for e in self.terms)) <= 1

    def homogeneous_part(self, d):
        return Poly._raw(self.n, dict((e, c) for e, c in six.iteritems(self.terms)
                                      if sum(e) == d))

    def initial_form(self):
        """Lowest degree homogeneous part."""
        if not self.terms:
            return self
        return self.homogeneous_part(self.order)

    def variables(self):
        """Indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def lead(self, order=DEGREVLEX):
        """``(exponent, coefficient)`` of the leading term under ``order``."""
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(six.iteritems(self.terms), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order=DEGREVLEX):
        if not self.terms:
            return self
        return self * (1 / self.lead(order)[1])

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("polynomials over %d and %d variables" % (self.n, other.n))
            return other
        return Poly.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in six.iteritems(other.terms):
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, dict((e, -c) for e, c in six.iteritems(self.terms)))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _fraction(other)
            if not c:
                return Poly.zero(self.n)
            return Poly._raw(self.n, dict((e, v * c) for e, v in six.iteritems(self.terms)))
        other = self._coerce(other)
        terms = {}
        for e1, c1 in six.iteritems(self.terms):
            for e2, c2 in six.iteritems(other.terms):
                e = monomial_mul(e1, e2)
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly._raw(self.n, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by scalars only
        return self * (1 / _fraction(other))

    __div__ = __truediv__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly.one(self.n), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp, c):
        """Multiply by the single term ``c * x^exp``."""
        if not c:
            return Poly.zero(self.n)
        return Poly._raw(self.n, dict((monomial_mul(e, exp), v * c)
                                      for e, v in six.iteritems(self.terms)))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        try:
            c = _fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == ({(0,) * self.n: c} if c else {})

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(six.iteritems(self.terms))))
        return self._hash

    # calculus and substitution

    def differentiate(self, i):
        """Formal partial derivative with respect to variable ``i`` (0 based)."""
        if not 0 <= i < self.n:
            raise VariableIndexError("variable index %s out of range for %d variables" % (i, self.n))
        terms = {}
        for e, c in six.iteritems(self.terms):
            if e[i]:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return Poly._raw(self.n, terms)

    def substitute(self, values):
        """
        Compose with ``values``: variable ``i`` is replaced by ``values[i]``.

        All values must share the same variable count, which becomes the
        variable count of the result.
        """
        if len(values) != self.n:
            raise ValueError("need %d values, got %d" % (self.n, len(values)))
        m = values[0].n if values else 0
        powers = [dict() for _ in range(self.n)]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = values[i] ** k
            return cache[k]

        result = Poly.zero(m)
        for e, c in six.iteritems(self.terms):
            term = Poly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def truncate(self, i, bound):
        """Drop every term whose exponent of variable ``i`` is ``>= bound``."""
        return Poly._raw(self.n, dict((e, c) for e, c in six.iteritems(self.terms) if e[i] < bound))

    def embed(self, n, index_map):
        """Rewrite into ``n`` variables, variable ``i`` going to ``index_map[i]``."""
        terms = {}
        for e, c in six.iteritems(self.terms):
            new = [0] * n
            for i, k in enumerate(e):
                new[index_map[i]] += k
            terms[tuple(new)] = c
        return Poly(n, terms)

    def divmod(self, other, order=LEX):
        """
        Division by a single polynomial.

        Returns ``(q, r)`` with ``self == q * other + r`` and no term of ``r``
        divisible by the leading monomial of ``other``; ``r`` is zero iff
        ``other`` divides ``self``.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lc = other.lead(order)
        q, r = {}, {}
        p = self
        while p:
            exp, c = p.lead(order)
            m = monomial_div(exp, lexp)
            if m is None:
                r[exp] = c
                p = Poly._raw(self.n, dict((e, v) for e, v in six.iteritems(p.terms) if e != exp))
                continue
            coeff = c / lc
            q[m] = q.get(m, 0) + coeff
            p = p - other.mul_term(m, coeff)
        return Poly(self.n, q), Poly(self.n, r)

    def exact_div(self, other):
        """Quotient if ``other`` divides ``self`` exactly, else ``None``."""
        q, r = self.divmod(other)
        return None if r else q

    # conversions

    def to_str(self, names=None):
        """Render in the input grammar, terms in descending degrevlex order."""
        names = names or ['x%d' % i for i in range(self.n)]
        if not self.terms:
            return '0'
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms(DEGREVLEX)):
            mono = '*'.join(names[i] if k == 1 else '%s^%d' % (names[i], k)
                            for i, k in enumerate(e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = '%s*%s' % (mag, mono)
            if idx == 0:
                out.append('-' + body if c < 0 else body)
            else:
                out.append(('- ' if c < 0 else '+ ') + body)
        return ' '.join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "Poly(%s)" % self.to_str()

    def to_sympy(self, gens):
        """Expression over the sympy symbols ``gens``."""
        return sympy.Poly.from_dict(
            dict((e, sympy.Rational(c.numerator, c.denominator))
                 for e, c in six.iteritems(self.terms)) or {(0,) * self.n: 0},
            *gens, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, expr, gens):
        p = sympy.Poly(expr, *gens, domain=sympy.QQ)
        return cls(len(gens), dict((m, _fraction(c)) for m, c in p.terms()))


def sympy_gens(n):
    return sympy.symbols('x0:%d' % n) if n else ()


def squarefree_check(h):
    """
    True iff ``h`` has no repeated irreducible factor.

    Decided by the multivariate gcd of ``h`` with all its partials, which is
    constant exactly for squarefree ``h`` in characteristic zero.
    """
    if not h:
        raise ValueError("zero polynomial")
    gens = sympy_gens(h.n)
    if not gens:
        return True
    polys = [h.to_sympy(gens)] + [h.differentiate(i).to_sympy(gens) for i in range(h.n)]
    g = sympy.gcd_list([p for p in polys if not p.is_zero], *gens)
    return sympy.Poly(g, *gens).total_degree() == 0


def squarefree_part(p):
    """Product of the distinct irreducible factors of ``p`` (up to a constant)."""
    gens = sympy_gens(p.n)
    return Poly.from_sympy(sympy.sqf_part(p.to_sympy(gens)).as_expr(), gens)


def rational_factors(p):
    """Irreducible factors of ``p`` over the rationals, with multiplicity."""
    gens = sympy_gens(p.n)
    _, factors = sympy.factor_list(p.to_sympy(gens).as_expr(), *gens, domain=sympy.QQ)
    return [(Poly.from_sympy(f, gens), k) for f, k in factors]


def poly_gcd(p, q):
    gens = sympy_gens(p.n)
    return Poly.from_sympy(sympy.gcd(p.to_sympy(gens), q.to_sympy(gens)).as_expr(), gens)


def determinant(rows):
    """Laplace expansion along the first row."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    n = rows[0][0].n
    total = Poly.zero(n)
    for j in range(size):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
