# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import sys
from pathlib import Path

HERE = Path(__file__).parent
sys.path[:0] = [str(HERE.parent)]

import qhopf  # noqa: E402

# -- Project information -----------------------------------------------------
needs_sphinx = "4.3"

project = "qhopf"
copyright = "2024, qhopf developers"
author = "qhopf developers"

# The full version, including alpha/beta/rc tags
version = qhopf.__version__
release = qhopf.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",  # needs to be after napoleon
    "sphinx.ext.autosummary",
    "sphinx_copybutton",
]

templates_path = ["_templates"]

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# Generate the API documentation when building
autosummary_generate = True
autodoc_member_order = "bysource"
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = False
napoleon_use_rtype = True
napoleon_use_param = True

# The master toctree document.
master_doc = "index"

intersphinx_mapping = dict(
    numpy=("https://numpy.org/doc/stable/", None),
    pandas=("https://pandas.pydata.org/docs/", None),
    python=("https://docs.python.org/3", None),
    sympy=("https://docs.sympy.org/latest/", None),
)

language = "en"

pygments_style = "default"
pygments_dark_style = "native"

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_title = "qhopf"
html_show_sphinx = False

# Output file base name for HTML help builder.
htmlhelp_basename = "qhopf"
