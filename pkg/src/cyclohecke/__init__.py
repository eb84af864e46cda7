"""cyclohecke: exact computer algebra for cyclotomic Hecke algebras of
type G(l,1,n) and their cyclotomic Schur algebras.

Everything is computed over exact fields (QQ, GF(p), or rational functions
over either), so every identity the package claims is verified on the nose.
"""

__version__ = "0.1.0"

from .coeff import (  # noqa: F401
    QQ,
    GenericParams,
    LocalSplit,
    PrimeField,
    RatFunc,
    RationalFunctionField,
    quantum_integer,
    specialize_at_zero,
    split_at_zero,
)
from .combinat import (  # noqa: F401
    Multicomposition,
    Multipartition,
    Permutation,
    SemistandardTableau,
    StandardTableau,
)
from .hecke import HeckeAlgebra, HeckeElement  # noqa: F401
from .cellular import CellularBasis  # noqa: F401
from .traceform import (  # noqa: F401
    cellular_gram,
    class_dependence,
    class_element,
    gram_matrix,
    r_lambda,
    semisimple_criterion,
    structure_algebra,
    tau,
)
from .seminormal import SeminormalBasis, specialize_element  # noqa: F401
from .schur import (  # noqa: F401
    CocenterDecomposition,
    SchurContext,
    SchurElement,
    SchurSeminormal,
    SeparationError,
)
