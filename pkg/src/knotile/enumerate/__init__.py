"""Enumeration, census counting, layout filling and tile-number search."""

from knotile.enumerate.census import census
from knotile.enumerate.generate import SearchConstraints, count, expand_crossings, generate, generate_shadows
