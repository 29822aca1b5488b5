"""Exact combinatorics of the edge ring of a complete graph.

Thin re-export of the compiled extension: graphs and chordality, multidegree
arithmetic in the edge ring, monomial colon ideals with closed forms and a
brute-force oracle, and the family/filtration verifiers.
"""

from ._core import *  # noqa: F401,F403
