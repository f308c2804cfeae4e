# -*- coding: utf-8 -*-
"""Sphinx configuration for the qkdleak documentation"""
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import qkdleak  # NOQA

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]
autodoc_member_order = 'bysource'
autodoc_mock_imports = ['numpy', 'scipy']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']

project = u'qkdleak'
copyright = u'qkdleak developers'
version = qkdleak.__version__
release = qkdleak.__version__

add_module_names = True
pygments_style = 'sphinx'

html_theme = 'default'
html_show_sourcelink = False
html_show_sphinx = False
htmlhelp_basename = 'qkdleakdoc'

man_pages = [
    ('index', 'qkdleak', u'qkdleak Documentation', [u'qkdleak developers'], 1)
]
