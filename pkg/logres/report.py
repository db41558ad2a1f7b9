# -*-  coding: utf-8 -*-
"""
Verdicts, consistency records and the divisor report.

Everything here converts to plain JSON-able dicts and back, so a report
read from its JSON compares equal to the report that wrote it.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import six

from logres.lib.exceptions import ConsistencyError
from logres.lib.json_interface import dumps

TRUE = 'true'
FALSE = 'false'
UNDECIDED = 'undecided'

SCHEMA_VERSION = 1

#: Verdict fields of a report, in display order.
VERDICT_FIELDS = (
    'free',
    'euler_homogeneous',
    'jacobian_radical',
    'jacobian_eq_conductor',
    'residues_weakly_holomorphic',
    'normal_crossing_at_origin',
    'normal_crossing_codim1',
    'gorenstein_singular_locus',
)


def _text(value):
    if value is None or isinstance(value, six.string_types):
        return value
    if isinstance(value, (list, tuple)):
        return [_text(v) for v in value]
    return str(value)


class Verdict(object):
    """
    Outcome of one decision procedure.

    ``value`` is ``true``, ``false`` or ``undecided`` for the conditions and
    one of ``empty``, ``gorenstein``, ``not_gorenstein``, ``undecided`` for
    the singular locus. ``witness`` backs a negative answer, ``certificate``
    a positive one; both are stored as text.
    """

    def __init__(self, value, witness=None, certificate=None, note=''):
        self.value = value
        self.witness = _text(witness)
        self.certificate = _text(certificate)
        self.note = note

    @classmethod
    def from_bool(cls, flag, witness=None, certificate=None, note=''):
        return cls(TRUE if flag else FALSE, witness, certificate, note)

    @classmethod
    def undecided(cls, note=''):
        return cls(UNDECIDED, note=note)

    @property
    def is_true(self):
        return self.value == TRUE

    @property
    def is_false(self):
        return self.value == FALSE

    @property
    def decided(self):
        return self.value != UNDECIDED

    def to_dict(self):
        return {'value': self.value, 'witness': self.witness,
                'certificate': self.certificate, 'note': self.note}

    @classmethod
    def from_dict(cls, data):
        return cls(data['value'], data.get('witness'), data.get('certificate'),
                   data.get('note', ''))

    def __eq__(self, other):
        return isinstance(other, Verdict) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Verdict(%s%s)" % (self.value, ', %s' % self.note if self.note else '')


class ConsistencyRecord(object):
    """A proven implication or equivalence evaluated on one germ."""

    def __init__(self, name, holds, detail='', inputs=None):
        self.name = name
        self.holds = bool(holds)
        self.detail = detail
        self.inputs = dict(inputs or {})

    def to_dict(self):
        return {'name': self.name, 'holds': self.holds, 'detail': self.detail,
                'inputs': self.inputs}

    @classmethod
    def from_dict(cls, data):
        return cls(data['name'], data['holds'], data.get('detail', ''), data.get('inputs'))

    def __eq__(self, other):
        return isinstance(other, ConsistencyRecord) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "ConsistencyRecord(%s, %s)" % (self.name, self.holds)


def check(name, holds, detail='', **inputs):
    """
    Builds a record and raises :class:`ConsistencyError` when it fails.
    """
    record = ConsistencyRecord(name, holds, detail, inputs)
    if not record.holds:
        raise ConsistencyError(record)
    return record


class DivisorReport(object):
    """
    Everything :func:`logres.criteria.analyze` found out about one germ.

    Args:
        germ (dict): ``variables`` and ``h`` as text.
        verdicts (dict): field name to :class:`Verdict`.
        data (dict): JSON-able computed objects (ideals, residues, bounds).
        consistency (list): :class:`ConsistencyRecord` values, all holding.
        provenance (dict): run configuration, seeds, precision, timings.
    """

    def __init__(self, germ, verdicts=None, data=None, consistency=None, provenance=None):
        self.germ = dict(germ)
        self.verdicts = dict(verdicts or {})
        self.data = dict(data or {})
        self.consistency = list(consistency or [])
        self.provenance = dict(provenance or {})

    def verdict(self, name):
        return self.verdicts.get(name)

    def add(self, record):
        if not record.holds:
            raise ConsistencyError(record)
        self.consistency.append(record)

    def to_dict(self):
        return {
            'schema': SCHEMA_VERSION,
            'germ': self.germ,
            'verdicts': dict((k, v.to_dict()) for k, v in six.iteritems(self.verdicts)),
            'data': self.data,
            'consistency': [r.to_dict() for r in self.consistency],
            'provenance': self.provenance,
        }

    @classmethod
    def from_dict(cls, data):
        if data.get('schema') != SCHEMA_VERSION:
            raise ValueError("unsupported report schema %r" % data.get('schema'))
        return cls(data['germ'],
                   dict((k, Verdict.from_dict(v)) for k, v in six.iteritems(data['verdicts'])),
                   data.get('data'),
                   [ConsistencyRecord.from_dict(r) for r in data.get('consistency', [])],
                   data.get('provenance'))

    def to_json(self):
        return dumps(self.to_dict())

    def to_text(self):
        lines = ['germ: %s = 0 in (%s)' % (self.germ['h'], ', '.join(self.germ['variables']))]
        for name in VERDICT_FIELDS:
            verdict = self.verdicts.get(name)
            if verdict is None:
                continue
            extra = ''
            if verdict.witness:
                extra = '  witness: %s' % (verdict.witness,)
            elif verdict.note:
                extra = '  (%s)' % verdict.note
            lines.append('  %-28s %s%s' % (name, verdict.value, extra))
        for key in sorted(self.data):
            lines.append('  %-28s %s' % (key, self.data[key]))
        lines.append('consistency:')
        for record in self.consistency:
            lines.append('  [ok] %s %s' % (record.name, record.detail))
        lines.append('provenance: %s' % ', '.join('%s=%s' % (k, self.provenance[k])
                                                  for k in sorted(self.provenance)))
        return '\n'.join(lines)

    def __eq__(self, other):
        return isinstance(other, DivisorReport) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "DivisorReport(%s)" % self.germ.get('h')
