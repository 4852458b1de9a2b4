"""Exact invariants of singularities of pairs.

Multiplier ideals, log canonical thresholds and jumping numbers of monomial
ideals; F-thresholds in positive characteristic; Bernstein-Sato functional
equation checks; contact-locus codimensions; multiplicity inequalities.
"""
__version__ = "0.1.0"
