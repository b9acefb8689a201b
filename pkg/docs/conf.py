# Sphinx configuration for the setfeat docs.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from setfeat import __version__  # noqa: E402

project = "setfeat"
copyright = "2022, Braden Mars"
author = "Braden Mars"
release = __version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosectionlabel",
]

# Library entry points are documented one by one in usage.rst.
autodoc_default_options = {"members": False}
autodoc_typehints = "description"
autosectionlabel_prefix_document = True

# Pygments has no lexer for the term language; grammar.rst blocks stay plain.
highlight_language = "none"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "sphinx_rtd_theme"
html_title = f"setfeat {release}"
