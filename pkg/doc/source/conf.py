# -*- coding: utf-8 -*-
#
# Framer documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

import framer

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Framer'
copyright = u'2026, the Framer developers'

version = framer.__version__
release = framer.__version__

exclude_patterns = []
pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'framerdoc'

man_pages = [
    ('index', 'framer', u'Framer Documentation',
     [u'the Framer developers'], 1)
]
