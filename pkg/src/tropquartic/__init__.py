"""Tropical bitangent classes of smooth plane quartics.

Enumeration of regular unimodular triangulations of the quartic Newton
polygon, deformation-motif detection, real lifting conditions over all
sign vectors, and an exact geometric bitangent-class engine.
"""

__version__ = "0.1.0"
