from .core import (  # noqa: F401
    DEFAULT_TOL,
    PassiveInterferometer,
    SqueezerProfile,
    SymplecticForm,
    SymplecticMatrix,
    controlled_z_matrix,
    is_orthogonal,
    is_symplectic,
    nearest_passive,
    omega,
    shear_matrix,
    squeezer_matrix,
    symplectic_basis,
    symplectic_eigenvalues,
    symplectic_form,
    symplectic_product,
    symplectic_rows_error,
    unitary_to_symplectic,
)
from .decompositions import BlochMessiahFactors, bloch_messiah, takagi, williamson  # noqa: F401
