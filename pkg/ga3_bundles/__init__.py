"""
ga3_bundles - Ga^3-structures on split P^2-bundles over P^1, synthesized by elementary links
and certified symbolically.
"""

__version__ = "1.0.0"
