# -*-  coding: utf-8 -*-
"""
Certified radical test.

A ``radical`` answer comes with the reason it is certain (maximal ideal,
squarefree leading ideal, squarefree univariate eliminants, or a complete
intersection whose Jacobian minors cut out a smaller set); a
``not_radical`` answer comes with a witness ``w`` such that ``w`` is not in
the ideal and ``w^2`` is, together with the division certificate of
``w^2``. Anything else is ``undecided``.

Positive dimensional ideals are also cut by seeded random hyperplanes down
to dimension zero; the outcome on the slice and the seed go into the reason.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from itertools import combinations

from logres.config import settings
from logres.groebner.ideal import Ideal, ideal_quotient, monomial_dimension
from logres.lib.utils import make_rng
from logres.log import log
from logres.poly.poly import Poly, determinant, squarefree_part

RADICAL = 'radical'
NOT_RADICAL = 'not_radical'
UNDECIDED = 'undecided'


class RadicalResult(object):
    """
    Attributes:
        status (str): ``radical``, ``not_radical`` or ``undecided``.
        witness (Poly): for ``not_radical``.
        certificate: division certificate of ``witness ** 2``.
        reason (str): how the answer was obtained.
        seed (int): seed of the random candidates.
    """

    def __init__(self, status, witness=None, certificate=None, reason='', seed=None):
        self.status = status
        self.witness = witness
        self.certificate = certificate
        self.reason = reason
        self.seed = seed

    def __repr__(self):
        return "RadicalResult(%s, %s)" % (self.status, self.reason)


def _squarefree_leads(basis):
    return all(max(exp) <= 1 for _, exp in basis.leading_terms())


def _certified_witness(I, w, local, reason, seed):
    if I.contains(w, local):
        return None
    _, cert = I.normal_form(w * w, local=local, certify=True)
    if any(cert.remainder):
        return None
    return RadicalResult(NOT_RADICAL, w, cert, reason, seed)


def _power_witness(I, f, local, reason, seed, bound=64):
    """``f^j`` with ``f^j`` outside and ``f^2j`` inside ``I``, if ``f`` is nilpotent mod ``I``."""
    power = f
    for k in range(2, bound):
        power = power * f
        if I.contains(power, local):
            return _certified_witness(I, f ** ((k + 1) // 2), local, reason, seed)
    return None


def _candidates(I, rng, budget):
    n = I.n
    seen = set()
    for i in range(n):
        yield Poly.variable(n, i)
    for g in I.all_gens:
        s = squarefree_part(g)
        if s.degree < g.degree:
            yield s
    for _ in range(budget):
        form = Poly.zero(n)
        for i in range(n):
            form = form + Poly.variable(n, i) * rng.randint(-3, 3)
        if form and form not in seen:
            seen.add(form)
            yield form
    for i in range(n):
        univariate = I.eliminate([j for j in range(n) if j != i]).gens
        for p in univariate:
            s = squarefree_part(p)
            if s.degree >= 1:
                yield s


def _quotient_witness(I, f, local, seed):
    """
    Non-radical witness from ``f``: a generator ``g`` of ``I : f^2`` outside
    ``I : f`` gives ``w = f * g`` with ``w`` outside and ``w^2`` inside ``I``.
    """
    if I.contains(f, local):
        return None
    f_ideal = Ideal([f], I.context)
    q1 = ideal_quotient(I, f_ideal)
    q2 = ideal_quotient(I, Ideal([f * f], I.context))
    for g in q2.gens:
        if not q1.contains(g, local):
            found = _certified_witness(I, f * g, local, "quotient by %s" % I.context.to_str(f),
                                       seed)
            if found:
                return found
    return None


def _dimension(I, local):
    return monomial_dimension([exp for _, exp in I.standard_basis(local).leading_terms()], I.n)


def _zero_dimensional(I, local, seed):
    if not local:
        return _seidenberg(I, seed)
    n = I.n
    missing = [x for x in (Poly.variable(n, i) for i in range(n)) if not I.contains(x, local)]
    if not missing:
        return RadicalResult(RADICAL, reason="maximal ideal", seed=seed)
    return _power_witness(I, missing[0], local, "nilpotent variable", seed) or \
        RadicalResult(UNDECIDED, reason="nilpotency bound exceeded", seed=seed)


def _slice(I, dim, local, rng, attempts=4):
    """
    ``I`` plus ``dim`` random hyperplanes (through the origin when local),
    or ``None`` when no attempt leaves a zero dimensional ideal.
    """
    n = I.n
    for _ in range(attempts):
        forms = []
        for _ in range(dim):
            form = Poly.zero(n)
            for i in range(n):
                form = form + Poly.variable(n, i) * rng.randint(-5, 5)
            if not local:
                form = form + rng.randint(-5, 5)
            forms.append(form)
        cut = Ideal(list(I.all_gens) + forms, I.context)
        if not cut.is_unit(local) and _dimension(cut, local) == 0:
            return cut
    return None


def _irredundant(I, local):
    gens = list(I.all_gens)
    k = len(gens) - 1
    while k >= 0:
        rest = gens[:k] + gens[k + 1:]
        if rest and Ideal(rest, I.context).contains(gens[k], local):
            gens = rest
        k -= 1
    return gens


def _reduced_complete_intersection(I, dim, local):
    """
    ``I`` is generated by ``c = n - dim`` elements and the ``c``-minors of
    their Jacobian matrix meet ``V(I)`` in smaller dimension. Then ``I`` is
    unmixed and generically reduced, hence radical.
    """
    n = I.n
    gens = _irredundant(I, local)
    c = n - dim
    if len(gens) != c:
        return False
    rows = [[g.differentiate(i) for i in range(n)] for g in gens]
    minors = [determinant([[r[j] for j in cols] for r in rows])
              for cols in combinations(range(n), c)]
    singular = Ideal(list(gens) + [m for m in minors if m], I.context)
    return singular.is_unit(local) or _dimension(singular, local) < dim


def radical_test(I, seed=None):
    """
    Decides whether ``I`` is radical, locally at the origin when the
    context order is local and globally otherwise.

    Returns:
        :class:`RadicalResult`
    """
    seed = settings.SEED if seed is None else seed
    local = I.context.is_local
    if I.is_unit(local):
        return RadicalResult(RADICAL, reason="unit ideal", seed=seed)
    basis = I.standard_basis(local)
    dim = monomial_dimension([exp for _, exp in basis.leading_terms()], I.n)

    if local and dim == 0:
        return _zero_dimensional(I, local, seed)

    if _squarefree_leads(basis):
        return RadicalResult(RADICAL, reason="squarefree leading ideal", seed=seed)
    if local and _squarefree_leads(I.global_basis):
        return RadicalResult(RADICAL, reason="squarefree global leading ideal", seed=seed)

    if dim == 0:
        return _seidenberg(I, seed)

    rng = make_rng(seed, settings.RADICAL_SEED_OFFSET)
    cut = _slice(I, dim, local, rng)
    sliced = _zero_dimensional(cut, local, seed).status if cut is not None else UNDECIDED
    log.debug("radical test: dimension %d, slice %s (seed %d)", dim, sliced, seed)

    # I contains the squarefree part of each generator, or one of them is a witness
    for g in I.all_gens:
        s = squarefree_part(g)
        if not I.contains(s, local):
            found = _power_witness(I, s, local, "squarefree part of %s" % I.context.to_str(g),
                                   seed)
            if found:
                return found

    if _reduced_complete_intersection(I, dim, local):
        return RadicalResult(RADICAL, reason="reduced complete intersection, slice %s (seed %d)"
                             % (sliced, seed), seed=seed)

    tried = 0
    for f in _candidates(I, rng, settings.RADICAL_TRIAL_BUDGET):
        tried += 1
        found = _quotient_witness(I, f, local, seed)
        if found:
            log.debug("radical test: witness after %d candidates", tried)
            return found
    log.debug("radical test undecided after %d candidates", tried)
    return RadicalResult(UNDECIDED, reason="no witness among %d candidates, slice %s (seed %d)"
                         % (tried, sliced, seed), seed=seed)


def _seidenberg(I, seed):
    """Zero dimensional global case via squarefree parts of univariate eliminants."""
    n = I.n
    for i in range(n):
        eliminant = [p for p in I.eliminate([j for j in range(n) if j != i]).gens
                     if p.degree >= 1]
        if not eliminant:
            return RadicalResult(UNDECIDED, reason="missing eliminant", seed=seed)
        s = squarefree_part(eliminant[0])
        if not I.contains(s, local=False):
            return _power_witness(I, s, False, "eliminant in variable %d" % i, seed) or \
                RadicalResult(UNDECIDED, reason="nilpotency bound exceeded", seed=seed)
    return RadicalResult(RADICAL, reason="squarefree eliminants", seed=seed)
