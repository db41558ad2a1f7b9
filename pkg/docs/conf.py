# -*- coding: utf-8 -*-
#
# Logres documentation build configuration file.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))
os.environ.setdefault('LOGRES_SETTINGS', 'logres.settings')

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

napoleon_numpy_docstring = False
napoleon_use_ivar = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'Logres'
copyright = '2015, ZetaOps'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_theme = 'alabaster'
htmlhelp_basename = 'Logresdoc'
