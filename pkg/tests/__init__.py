# -*-  coding: utf-8 -*-
import os

os.environ.setdefault('LOGRES_SETTINGS', 'tests.settings')
