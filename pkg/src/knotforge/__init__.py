"""knotforge: exact-arithmetic knot invariants and dihedral-cover bookkeeping.

Everything is computed over the integers and rationals; there is no floating
point anywhere in the computational kernel.
"""

__version__ = "0.1.0"
