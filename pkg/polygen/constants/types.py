from typing import Literal

import numpy as np
import numpy.typing as npt

ComplexScalar = complex
ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]

SeedKind = Literal[
    "affine", "nonautonomous-linear", "second-order-multiplicative", "q-affine"
]
OrderingKind = Literal["lexicographic", "fixed-mu", "contiguity", "random"]
SolveMode = Literal["iterated", "closed-form"]
AssignmentMethod = Literal["hungarian", "brute-force"]
Verdict = Literal[
    "exact-periodic",
    "asymptotically-periodic",
    "convergent",
    "divergent",
    "inconclusive",
]
TaxonomyLabel = Literal[
    "isochronous",
    "asymptotically-isochronous",
    "convergent",
    "divergent",
    "inconclusive",
]
OutputFormat = Literal["csv", "json", "svg"]

# JSON-facing shapes
ComplexPair = list[float]
ReportDict = dict[str, object]
