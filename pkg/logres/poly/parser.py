# -*-  coding: utf-8 -*-
"""
Recursive descent parser for the polynomial grammar::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | var | '(' expr ')'

Expressions are evaluated while they are parsed, so the parser returns an
expanded :class:`~logres.poly.poly.Poly` rather than a syntax tree.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import re
from collections import namedtuple
from fractions import Fraction

from logres.lib.exceptions import PolySyntaxError, UnknownVariableError
from logres.poly.poly import Poly

Token = namedtuple('Token', 'type value pos')

TOKEN_SPEC = [
    ('NUMBER', r'\d+(?:/\d+)?'),
    ('ID', r'[A-Za-z_][A-Za-z_0-9]*'),
    ('PLUS', r'\+'),
    ('MINUS', r'-'),
    ('MUL', r'\*'),
    ('POW', r'\^'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('SKIP', r'\s+'),
    ('MISMATCH', r'.'),
]
TOKEN_RE = re.compile('|'.join('(?P<%s>%s)' % pair for pair in TOKEN_SPEC))


def tokenize(text):
    tokens = []
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        if kind == 'SKIP':
            continue
        if kind == 'MISMATCH':
            raise PolySyntaxError(match.start(), "unexpected character %r" % match.group())
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token('EOF', None, len(text)))
    return tokens


class Parser(object):
    """
    Parses one expression over a fixed list of variable names.

    Args:
        text (str): the expression.
        variables (list): variable names; their order fixes exponent slots.
    """

    def __init__(self, text, variables):
        self.text = text
        self.variables = list(variables)
        self.index = dict((name, i) for i, name in enumerate(self.variables))
        self.n = len(self.variables)
        self.tokens = tokenize(text)
        self.pos = 0
        self.current_token = self.tokens[0]

    def eat(self, token_type):
        """Consume the current token if it has the expected type."""
        if self.current_token.type != token_type:
            raise PolySyntaxError(self.current_token.pos, "expected %s, got %s" % (
                token_type, self.current_token.value or 'end of input'))
        tok = self.current_token
        self.pos += 1
        self.current_token = self.tokens[self.pos]
        return tok

    def base(self):
        tok = self.current_token
        if tok.type == 'NUMBER':
            self.eat('NUMBER')
            num, _, den = tok.value.partition('/')
            if den and int(den) == 0:
                raise PolySyntaxError(tok.pos, "zero denominator")
            return Poly.constant(self.n, Fraction(int(num), int(den or 1)))
        if tok.type == 'ID':
            self.eat('ID')
            if tok.value not in self.index:
                raise UnknownVariableError(tok.value, tok.pos)
            return Poly.variable(self.n, self.index[tok.value])
        if tok.type == 'LPAREN':
            self.eat('LPAREN')
            node = self.expr()
            self.eat('RPAREN')
            return node
        raise PolySyntaxError(tok.pos, "unexpected %s" % (tok.value or 'end of input'))

    def factor(self):
        result = self.base()
        if self.current_token.type == 'POW':
            self.eat('POW')
            tok = self.eat('NUMBER')
            if '/' in tok.value:
                raise PolySyntaxError(tok.pos, "exponent must be a nonnegative integer")
            result = result ** int(tok.value)
        return result

    def term(self):
        result = self.factor()
        while self.current_token.type == 'MUL':
            self.eat('MUL')
            result = result * self.factor()
        return result

    def expr(self):
        negate = False
        if self.current_token.type == 'MINUS':
            self.eat('MINUS')
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.current_token.type in ('PLUS', 'MINUS'):
            op = self.eat(self.current_token.type).type
            rhs = self.term()
            result = result + rhs if op == 'PLUS' else result - rhs
        return result

    def parse(self):
        result = self.expr()
        if self.current_token.type != 'EOF':
            raise PolySyntaxError(self.current_token.pos,
                                  "unexpected %s" % self.current_token.value)
        return result


def parse(text, variables):
    """
    Parses ``text`` into a :class:`Poly` over ``variables``.

    >>> parse("x*y - y^3", ['x', 'y']).to_str(['x', 'y'])
    '-y^3 + x*y'
    """
    return Parser(text, variables).parse()


def parse_variables(text):
    """Splits a ``--vars`` style comma separated list."""
    names = [v.strip() for v in text.split(',') if v.strip()]
    for name in names:
        if not re.match(r'^[A-Za-z_][A-Za-z_0-9]*$', name):
            raise PolySyntaxError(text.index(name), "invalid variable name %r" % name)
    if len(set(names)) != len(names):
        raise PolySyntaxError(0, "duplicate variable name")
    return names
