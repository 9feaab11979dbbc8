"""Exact stationary distribution of the two-species PASEP.

Three independent routes to the same numbers: the explicit Markov chain
(:mod:`.chain`), the tridiagonal Matrix Ansatz (:mod:`.ansatz`) and weighted
Laguerre-history enumeration (:mod:`.histories`), plus the permutation model
(:mod:`.permutations`) and the bijections tying them together.
"""

from .ansatz import z_poly_ansatz, z_total_ansatz
from .chain import build_chain, stationary_exact
from .histories import History, Step, z_poly_paths, z_total_paths
from .permutations import PSP, PartiallySignedPermutation, z_poly_perms
from .qseries import QPoly, qfactorial, qint
from .states import SegComposition, ade_of_state, iota_word, state_of_ade

__all__ = [
    "History",
    "PSP",
    "PartiallySignedPermutation",
    "QPoly",
    "SegComposition",
    "Step",
    "ade_of_state",
    "build_chain",
    "iota_word",
    "qfactorial",
    "qint",
    "state_of_ade",
    "stationary_exact",
    "z_poly_ansatz",
    "z_poly_paths",
    "z_poly_perms",
    "z_total_ansatz",
    "z_total_paths",
]
