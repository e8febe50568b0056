# -*- coding: utf-8 -*-
#
# oodc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosectionlabel',
    'sphinxcontrib.programoutput',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'oodc'
copyright = '2026, the oodc developers'
author = 'the oodc developers'

# get the version, this will assign __version__
exec(open('../oodc/version.py').read())
version = __version__
release = version

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {}
htmlhelp_basename = 'oodcdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'oodc', 'oodc Documentation',
     [author], 1)
]
