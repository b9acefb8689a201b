# -*- coding: utf-8 -*-

"""Top-level package for setfeat."""

__author__ = """Braden Mars"""
__email__ = "bradenmars@bradenmars.me"
__version__ = "0.1.0"
