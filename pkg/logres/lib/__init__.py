# -*-  coding: utf-8 -*-
"""Shared helpers: settings-free utilities, errors, logging and commands."""
