"""vncore: exact verification of semibialgebra, core, and Hopf-type axioms
and of the fusion-map identities, on structures given by structure constants.
"""

from .field import PrimeField, QQ, Rationals
from .kernels import BACKEND
from .linmap import (LinMap, chain, compose, identity, place_on_legs, swap,
                     tensor, tensor_all)
from .structures import (AXIOM_IDS, AxiomReport, CheckResult, Structure,
                         Witness, build_structure, check_axiom, classify,
                         compute_r, compute_t)
from .fusion import (IDENTITY_IDS, check_identity, convolution, fourier_l,
                     fusion_f, fusion_g, generalized_inverse)
from . import catalog, formats

__all__ = [
    "PrimeField", "QQ", "Rationals", "BACKEND",
    "LinMap", "chain", "compose", "identity", "place_on_legs", "swap",
    "tensor", "tensor_all",
    "AXIOM_IDS", "AxiomReport", "CheckResult", "Structure", "Witness",
    "build_structure", "check_axiom", "classify", "compute_r", "compute_t",
    "IDENTITY_IDS", "check_identity", "convolution", "fourier_l",
    "fusion_f", "fusion_g", "generalized_inverse",
    "catalog", "formats",
]

__version__ = "0.1.0"
