#         Python H_Phi Embedding Library
#      Released under the MIT license
#
# Sphinx configuration for the hphi-embedding documentation.

import os
import sys

import sphinx_rtd_theme  # noqa: F401


ROOT_PATH = os.path.join(os.path.dirname(__file__), "..", "..")

with open(os.path.join(ROOT_PATH, "VERSION"), 'r') as f:
    package_version = f.read().strip()

# The package is imported from the source tree, not an installed copy.
sys.path.insert(0, os.path.abspath(os.path.join(ROOT_PATH, 'src')))


# -- Project -----------------------------------------------------------------

project = 'hphi-embedding'
copyright = '2026, H_Phi Embedding Library authors'
author = 'H_Phi Embedding Library authors'

version = package_version
release = package_version


# -- General -----------------------------------------------------------------

needs_sphinx = '3.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx_rtd_theme',
]

source_suffix = ['.rst']
master_doc = 'index'
language = 'en'

exclude_patterns = []
pygments_style = 'sphinx'

# Class pages show the class docstring followed by the constructor's.
autoclass_content = 'both'

# Members are listed in source order, which follows the order of computation.
autodoc_member_order = 'bysource'

# Numerical back-ends are mocked so the pages build without compiled wheels.
autodoc_mock_imports = ['scipy', 'PIL']


# -- HTML output -------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
html_theme_options = {
    'collapse_navigation': False,
}
