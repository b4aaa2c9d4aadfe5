"""Exact-arithmetic toolkit for certified small normal-basis generators,
primitive elements, and successive minima of ideal lattices."""

__version__ = "0.1.0"

from .errors import (BadParameter, ExhaustedSimplex, NormbasisError, NotAnOrder,
                     NotGalois, NotIntegral, NotNormalBasis, PrecisionExhausted,
                     ReduciblePolynomial, ZeroIdeal)
from .exact import UniPoly, fr, fr_str
from .numberfield import FieldSpec, NumberField, catalog_field, make_field
from .embeddings import EmbeddingSet, compute_embeddings
from .galois import GaloisAction, apply_automorphism, compute_galois_action
from .ideals import (FractionalIdeal, ideal_from_generators, ideal_mul,
                     ideal_norm, principal_ideal, ring_of_integers)
from .minima import (check_corollary_bounds, check_product_inequality,
                     minima_family, products_span_check, successive_minima)
from .avoidance import PolynomialMap, simplex_points, simplex_search
from .normal_basis import (NormalBasisCertificate, check_lower_bound, delta,
                           find_normal_basis, is_normal_basis)
from .primitive import (PrimitiveElementCertificate, find_primitive_element,
                        is_primitive)
