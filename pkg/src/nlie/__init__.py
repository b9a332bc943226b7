"""Representations of the n-Lie algebra W^n through generalized Verma modules.

Submodules:

``poly``      exact sparse polynomials and determinants
``brackets``  the n-ary brackets of W^n, S^n, the vector product and SW^n
``cartan``    vector fields of the Cartan algebra W_{n-1}
``wedge``     the basic Lie algebra on (n-1)-wedges and the ideal generators
``glrep``     gl_N weights, Freudenthal multiplicities and module slices
``verma``     generalized Verma modules and their singular vectors
``qgen``      explicit generators and the monomial families of the classification
``classify``  the classification predicate and its brute-force check
"""

from .brackets import bracket_s, bracket_sw, bracket_vp, bracket_w, filippov_residual
from .cartan import VectorField, commutator, divergence
from .classify import Verdict, brute_verify, scan, theorem7_predicate
from .glrep import freudenthal, truncated_irreducible, weyl_dim
from .poly import Poly, format_poly, parse_poly
from .qgen import GeneratorSpec, explicit_qgen, reproduce_equation
from .verma import VermaSlice, singular_vectors
from .wedge import WedgeElement, abstract_qgen, ad_to_field, lie_bracket

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "format_poly",
    "parse_poly",
    "bracket_w",
    "bracket_s",
    "bracket_vp",
    "bracket_sw",
    "filippov_residual",
    "VectorField",
    "commutator",
    "divergence",
    "WedgeElement",
    "lie_bracket",
    "ad_to_field",
    "abstract_qgen",
    "freudenthal",
    "weyl_dim",
    "truncated_irreducible",
    "VermaSlice",
    "singular_vectors",
    "GeneratorSpec",
    "explicit_qgen",
    "reproduce_equation",
    "Verdict",
    "theorem7_predicate",
    "brute_verify",
    "scan",
]
