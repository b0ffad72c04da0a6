# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

import os
import sys

sys.path.insert(0, os.path.abspath('../../packages'))

master_doc = 'index'

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown',
}

# -- Project information -----------------------------------------------------

project = 'orbitsieve'
copyright = '2024 orbitsieve developers'
author = 'orbitsieve developers'

language = 'en'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.mathjax',
    'myst_parser',
    'sphinxcontrib.autodoc_pydantic',
]

templates_path = []
exclude_patterns = []

# myst

myst_heading_anchors = 3
myst_enable_extensions = ['colon_fence', 'dollarmath']

# -- Options for HTML output -------------------------------------------------

html_static_path = []
html_search_language = 'en'
html_title = 'orbitsieve'
html_theme = 'furo'

html_theme_options = {
    'navigation_with_keys': True,
}

# Pydantic models
autodoc_pydantic_model_undoc_members = True
autodoc_pydantic_model_show_json = False
autodoc_pydantic_model_show_config_summary = False
autodoc_pydantic_model_show_field_summary = False
autodoc_pydantic_model_show_validator_summary = False
autodoc_pydantic_model_signature_prefix = 'class'
autodoc_pydantic_field_list_validators = False

autodoc_member_order = 'bysource'
autosectionlabel_prefix_document = True
