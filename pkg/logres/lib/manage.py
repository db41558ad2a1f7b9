# -*-  coding: utf-8 -*-
"""
Management command framework.

A command is a :class:`Command` subclass declaring ``CMD_NAME``, ``HELP``
and ``PARAMS``; :class:`ManagementCommands` turns every subclass into an
argparse sub-command, runs the chosen one and keeps its exit code.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import argparse
import sys


class Command(object):
    """
    Base of management commands.

    ``PARAMS`` items are argparse keyword dicts plus a ``name`` key, which
    becomes the ``--name`` flag and the attribute on ``self.manager.args``.
    ``run`` returns the process exit code.
    """
    CMD_NAME = ''
    HELP = ''
    PARAMS = []

    def __init__(self, manager):
        self.manager = manager

    def run(self):
        raise NotImplementedError

    @classmethod
    def _add_to(cls, subparsers):
        parser = subparsers.add_parser(cls.CMD_NAME, help=cls.HELP)
        for param in cls.PARAMS:
            kwargs = dict(param)
            name = kwargs.pop('name')
            parser.add_argument('--%s' % name, dest=name, **kwargs)
        parser.set_defaults(command=cls)
        return parser


def _all_commands(base=Command):
    for sub in base.__subclasses__():
        if sub.CMD_NAME:
            yield sub
        for deeper in _all_commands(sub):
            yield deeper


class ManagementCommands(object):
    """
    Parses ``args`` (``sys.argv[1:]`` when omitted) and runs the command.

    Attributes:
        args: parsed namespace.
        exit_code (int): value returned by the command.
    """

    def __init__(self, args=None, stdout=None):
        self.stdout = stdout or sys.stdout
        self.parser = argparse.ArgumentParser(description='logres management commands')
        subparsers = self.parser.add_subparsers(title='commands', dest='cmd_name')
        for cmd in sorted(_all_commands(), key=lambda c: c.CMD_NAME):
            cmd._add_to(subparsers)
        self.args = self.parser.parse_args(args)
        if not getattr(self.args, 'command', None):
            self.parser.print_help(self.stdout)
            self.exit_code = 2
            return
        self.exit_code = self.args.command(self).run()

    def write(self, text):
        self.stdout.write(text)
        if not text.endswith('\n'):
            self.stdout.write('\n')
