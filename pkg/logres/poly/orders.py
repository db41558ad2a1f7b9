# -*-  coding: utf-8 -*-
"""
Monomial orders.

Global orders (``lex``, ``degrevlex``, block ``elimination``) satisfy
``1 <= m`` for every monomial ``m``; the local order ``local-degrevlex``
satisfies ``m <= 1`` and is what standard bases in the localization at the
origin are computed with.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from sympy.polys.orderings import ProductOrder, grevlex, igrevlex, lex

from logres.lib.exceptions import ConfigurationError

KINDS = ('lex', 'degrevlex', 'elimination', 'local-degrevlex')


class MonomialOrder(object):
    """
    A monomial order on exponent tuples, optionally after permuting variables.

    Args:
        kind (str): one of :data:`KINDS`.
        permutation (tuple): ``permutation[k]`` is the variable index that is
            compared in position ``k``. Defaults to the identity.
        blocks (tuple): block sizes for ``elimination``; each block is
            compared by degrevlex and earlier blocks dominate.
    """

    def __init__(self, kind='degrevlex', permutation=None, blocks=None):
        if kind not in KINDS:
            raise ConfigurationError("unknown monomial order %r" % kind)
        self.kind = kind
        self.permutation = tuple(permutation) if permutation is not None else None
        self.blocks = tuple(blocks) if blocks else None
        if kind == 'lex':
            self._order = lex
        elif kind == 'degrevlex':
            self._order = grevlex
        elif kind == 'local-degrevlex':
            self._order = igrevlex
        else:
            if not self.blocks:
                raise ConfigurationError("elimination order needs block sizes")
            slices, start = [], 0
            for size in self.blocks:
                slices.append((grevlex, _Slice(start, start + size)))
                start += size
            self._order = ProductOrder(*slices)

    @property
    def is_global(self):
        return bool(self._order.is_global)

    @property
    def is_local(self):
        return not self.is_global

    def key(self, exp):
        """Sort key of an exponent tuple; larger key means larger monomial."""
        if self.permutation is not None:
            exp = tuple(exp[i] for i in self.permutation)
        return self._order(exp)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind and
                self.permutation == other.permutation and self.blocks == other.blocks)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.permutation, self.blocks))

    def __repr__(self):
        return "MonomialOrder(%s%s%s)" % (
            self.kind,
            ", perm=%s" % (self.permutation,) if self.permutation else '',
            ", blocks=%s" % (self.blocks,) if self.blocks else '')


class _Slice(object):
    """Picklable stand-in for ``lambda m: m[start:stop]``."""

    def __init__(self, start, stop):
        self.start = start
        self.stop = stop

    def __call__(self, monomial):
        return monomial[self.start:self.stop]


def elimination_order(n, drop):
    """
    Block order eliminating the variables in ``drop``.

    The dropped variables form the first block, so any polynomial whose
    leading monomial is free of them is free of them altogether.
    """
    drop = sorted(set(drop))
    keep = [i for i in range(n) if i not in drop]
    return MonomialOrder('elimination', permutation=drop + keep,
                         blocks=[b for b in (len(drop), len(keep)) if b])


DEGREVLEX = MonomialOrder('degrevlex')
LEX = MonomialOrder('lex')
LOCAL = MonomialOrder('local-degrevlex')
