# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))


# -- Project information -----------------------------------------------------

project = "uqbench"
copyright = "uqbench developers"
author = "uqbench developers"

version = "latest"
release = "latest"


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.napoleon",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]

napoleon_use_param = False
autosummary_generate = True
autodoc_default_options = {
    "members": None,
    "show-inheritance": None,
    "member-order": "groupwise",
}

mathjax_config = {
    "TeX": {
        "Macros": {
            "Uq": r"\overline{U}^H_q(\mathfrak{sl}_2)",
            "Zeta": r"\zeta_{2p}",
            "CC": r"\mathbb{C}",
        }
    }
}

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = None
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "uqbenchdoc"

latex_documents = [
    (master_doc, "uqbench.tex", "uqbench Documentation", author, "manual"),
]
man_pages = [(master_doc, "uqbench", "uqbench Documentation", [author], 1)]
