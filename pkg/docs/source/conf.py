# Sphinx configuration for resilient-qss.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import re
import sys
import sphinx_rtd_theme
sys.path.insert(0, os.path.abspath('../../'))

project = 'resilient-qss'
copyright = '2024, resilient-qss developers'
author = 'resilient-qss developers'

with open(os.path.abspath('../../resqss/__init__.py')) as handle:
    release = re.search(r'^__version__\s*=\s*"(.*)"', handle.read(), re.M).group(1)

extensions = [
   'sphinx_rtd_theme',
   'sphinx.ext.todo',
   'sphinx.ext.viewcode',
   'sphinx.ext.autodoc',
   'sphinx.ext.napoleon',
]

templates_path = ['_templates']
exclude_patterns = []

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
