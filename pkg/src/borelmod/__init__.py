"""Symbolic parametrization of unipotent orbits on the nilradical and its dual,
with modality, finite-field orbit counts and class-number polynomials."""

from .roots import (CartanType, Root, RootSystem, StructureConstants,
                    GoodPrimeData, build_root_system, structure_constants,
                    bad_primes)
from .poly import Var, MultiPoly, Constraint, parse_poly
from .action import ModuleWithFiltration, adjoint_module, coadjoint_module
from .cases import Budget, Case, Cell, Forest, lift, run, stabilizer_system
from .count import (ModalityResult, CountPolynomial, modality, point_count,
                    class_polynomial, class_number)
from .oracle import FiniteActionInstance, brute_orbits, brute_classes, verify

__version__ = "0.1.0"

__all__ = [
    "CartanType", "Root", "RootSystem", "StructureConstants", "GoodPrimeData",
    "build_root_system", "structure_constants", "bad_primes",
    "Var", "MultiPoly", "Constraint", "parse_poly",
    "ModuleWithFiltration", "adjoint_module", "coadjoint_module",
    "Budget", "Case", "Cell", "Forest", "lift", "run", "stabilizer_system",
    "ModalityResult", "CountPolynomial", "modality", "point_count",
    "class_polynomial", "class_number",
    "FiniteActionInstance", "brute_orbits", "brute_classes", "verify",
    "__version__",
]
