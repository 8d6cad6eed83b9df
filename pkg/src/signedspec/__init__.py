"""Signed graphs with symmetric spectrum: products, switching isomorphism and
cospectral constructions, checked with exact characteristic polynomials."""

from .core import (
    RootedSignedGraph,
    SignedGraph,
    delete_vertex,
    disjoint_union,
    from_edge_list,
    negate,
    sk8,
    switch,
)
from .iso import (
    IsoWitness,
    SearchTooLarge,
    are_isomorphic,
    are_switching_isomorphic,
    check_coiso,
    is_sign_symmetric,
    refute_sign_symmetry_by_clique,
)
from .poly import IntPolynomial, PolyMatrix
from .products import (
    Basis,
    Involution,
    find_involution,
    is_compatible,
    is_odd_basis,
    neps,
    neps_eigenvalues,
    neps_symmetry_certificate,
    rooted_product,
    rooted_product_char_poly,
    rooted_symmetry_certificate,
    uniform_rooted_char_poly,
)
from .search import (
    build_cospectral_pair,
    enumerate_signatures,
    find_cospectrally_rooted_pairs,
)
from .spectral import (
    Spectrum,
    are_cospectral,
    char_poly,
    eigenvalues,
    has_symmetric_spectrum,
    poly_matrix_det,
)

__version__ = "0.1.0"
