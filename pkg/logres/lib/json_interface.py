# -*-  coding: utf-8 -*-
"""JSON encoding for reports, with rational numbers as strings."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.


import json
from fractions import Fraction

from logres.poly.poly import Poly


class LogresJSONEncoder(json.JSONEncoder):
    def default(self, o):
        # exact rationals keep their exact text
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, Poly):
            return o.to_str()
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if hasattr(o, 'to_dict'):
            return o.to_dict()
        # Otherwise, let the default encoder handle the serialization
        return json.JSONEncoder.default(self, o)


def dumps(data, indent=2):
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(data, cls=LogresJSONEncoder, indent=indent, sort_keys=True,
                      separators=(',', ': '))
