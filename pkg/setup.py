#!/usr/bin/env python
"""
Setup script for comb-semibandit.

Provided for backward compatibility; the project configuration lives in
pyproject.toml.
"""

from setuptools import setup

setup()
