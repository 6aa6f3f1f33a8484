"""Chain complexes over GF(2): products, homology, and exact code distances."""

__version__ = "0.1.0"

from .gf2 import (
    BinMatrix,
    DimensionMismatch,
    EchelonBasis,
    column_space_basis,
    hstack,
    kernel_basis,
    kron,
    rank,
    row_space_basis,
    solve,
    vstack,
)
from .extnat import ExtNat, INFINITY, min_or_infinity
from .complexes import (
    ChainComplex,
    IndexOutOfRange,
    LevelOutOfRange,
    NotOrthogonal,
    one_complex,
    puncture,
    shorten_parity,
    validate,
)
from .distance import (
    DEFAULT_KERNEL_CAP,
    DistanceResult,
    KernelTooLarge,
    classical_distance,
    cohomological_distance,
    homological_distance,
)
from .products import (
    DistanceBounds,
    InvalidExponents,
    ProductLayout,
    distance_lower_bound,
    distance_upper_bound,
    kunneth_ranks,
    one_complex_product,
    power_complex,
    predicted_distance,
    product_dimensions,
    product_layout,
    tensor_product,
)
from .codes import (
    CodeParameters,
    CssCode,
    EnsembleSpec,
    InvalidSpec,
    css_parameters,
    extract_css,
    gallager_matrix,
    generate_matrix,
    repetition_circulant,
    repetition_parity,
    sparsity,
)
from .alist import (
    InconsistentWeights,
    ParseError,
    dumps_alist,
    loads_alist,
    read_alist,
    write_alist,
)

__all__ = [
    "BinMatrix",
    "ChainComplex",
    "CodeParameters",
    "CssCode",
    "DEFAULT_KERNEL_CAP",
    "DimensionMismatch",
    "DistanceBounds",
    "DistanceResult",
    "EchelonBasis",
    "EnsembleSpec",
    "ExtNat",
    "INFINITY",
    "InconsistentWeights",
    "IndexOutOfRange",
    "InvalidExponents",
    "InvalidSpec",
    "KernelTooLarge",
    "LevelOutOfRange",
    "NotOrthogonal",
    "ParseError",
    "ProductLayout",
    "classical_distance",
    "cohomological_distance",
    "column_space_basis",
    "css_parameters",
    "distance_lower_bound",
    "distance_upper_bound",
    "dumps_alist",
    "extract_css",
    "gallager_matrix",
    "generate_matrix",
    "homological_distance",
    "hstack",
    "kernel_basis",
    "kron",
    "kunneth_ranks",
    "loads_alist",
    "min_or_infinity",
    "one_complex",
    "one_complex_product",
    "power_complex",
    "predicted_distance",
    "product_dimensions",
    "product_layout",
    "puncture",
    "rank",
    "read_alist",
    "repetition_circulant",
    "repetition_parity",
    "row_space_basis",
    "shorten_parity",
    "solve",
    "sparsity",
    "tensor_product",
    "validate",
    "vstack",
    "write_alist",
]
