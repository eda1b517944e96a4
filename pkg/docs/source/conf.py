# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import svem

project = 'svem'
copyright = '2024-2025 svem developers'
author = 'svem developers'
version = svem.__version__
release = svem.__version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'svemdoc'
latex_documents = [
    (master_doc, 'svem.tex', 'svem Documentation',
     'svem developers', 'manual'),
]
man_pages = [
    (master_doc, 'svem', 'svem Documentation', [author], 1)
]
todo_include_todos = True
