from polygen.numerics.ordering import (
    index_of_permutation,
    lexicographic_order,
    order_by_mu,
    permutation_by_index,
    permutation_index_of,
)
from polygen.numerics.roots import zeros_from_coefficients
from polygen.numerics.scalars import principal_sqrt
from polygen.numerics.vieta import (
    coefficients_from_zeros,
    elementary_symmetric,
    evaluate,
)

__all__ = [
    "coefficients_from_zeros",
    "elementary_symmetric",
    "evaluate",
    "index_of_permutation",
    "lexicographic_order",
    "order_by_mu",
    "permutation_by_index",
    "permutation_index_of",
    "principal_sqrt",
    "zeros_from_coefficients",
]
