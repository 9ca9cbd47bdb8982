"""Exact computer algebra for graded modules over graded algebras:
loop and induced module constructions, central images, twisted group
algebras, and graded division algebra invariants over cyclotomic fields.
"""

__version__ = "0.1.0"
