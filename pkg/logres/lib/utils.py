# -*- coding: utf-8 -*-
"""Small helpers shared across the package."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import random
import threading

import six


def merge_truthy(*dicts):
    """Merge multiple dictionaries, keeping the truthy values in case of key collisions.

    If a key exists in multiple dictionaries passed to this function, the values from the latter
    dictionary is kept. If the value of the latter dictionary does not evaluate to True, then
    the value of the previous dictionary is kept. Zero is kept as a legitimate value.

    >>> merge_truthy({'seed': 3, 'format': 'text'}, {'seed': 0, 'format': None})
    {'seed': 0, 'format': 'text'}
    """
    merged = {}
    for d in dicts:
        for k, v in six.iteritems(d):
            keep = v or v == 0 and v is not None and not isinstance(v, bool)
            merged[k] = v if keep else merged.get(k, v)
    return merged


_LOCK_GUARD = threading.Lock()


class lazy_property(object):
    """
    Computes an attribute once and caches it on the instance.

    Each instance gets its own re-entrant lock, so concurrent readers of a
    shared immutable value all observe the single computed result.
    """

    def __init__(self, func):
        self.func = func
        self.name = func.__name__
        self.__doc__ = func.__doc__

    def _lock(self, obj):
        lock = obj.__dict__.get('_lazy_lock')
        if lock is None:
            with _LOCK_GUARD:
                lock = obj.__dict__.setdefault('_lazy_lock', threading.RLock())
        return lock

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        cache = obj.__dict__
        if self.name in cache:
            return cache[self.name]
        with self._lock(obj):
            if self.name not in cache:
                cache[self.name] = self.func(obj)
        return cache[self.name]


def make_rng(seed, offset=0):
    """Seeded PRNG used for every reproducible random choice."""
    return random.Random((int(seed) << 16) + offset)
