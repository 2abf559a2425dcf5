"""tamekit: exact verification toolkit for tame local Galois module structure.

Layers, bottom up:

- cyclotomic: exact arithmetic in Q(zeta_n) on the reduced power basis.
- padic: truncated Z_p[zeta_p] arithmetic, Teichmueller lifts, lambda-adic
  valuations of cyclotomic integers.
- groups: small finite groups as explicit multiplication tables.
- characters: exact character tables, restriction, induction, Adams
  operations on virtual characters.
- stickelberger: the pairing <chi, s> and its symmetrized variant, plus the
  classical identities relating them to induced cyclic characters.
- localmodel: formal uniformizer-power arithmetic for tame local extensions,
  resolvends and their equivariant determinants.
- gaussjacobi: Gauss and Jacobi sums over prime fields and the unit-index
  quotient J*.
- ledger: place-indexed bookkeeping of representing homomorphisms and the
  valuation-matching crux check.
- cli: command line front end over all of the above.
"""

from .cyclotomic import CycNum, zeta

__all__ = ["CycNum", "zeta"]
__version__ = "0.1.0"
