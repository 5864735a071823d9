"""Angular and radial Mathieu functions for elliptic cylinder problems.

Typical use: solve the coefficient eigenproblem once per ``(category, q)``
and evaluate anything from the result::

    >>> from mathieu import Category, eig_spm, spm, jpm
    >>> spec = eig_spm(Category.EVEN_EVEN, 5.0)
    >>> round(float(spec.char_values[0]), 10)
    -5.8000460209
"""

from .angular import (DEFAULT_DIM, Category, DegenerateNormalizationError,
                      OrderLookupError, SpectralData, build_matrix, cpm, dspm,
                      eig_spm, extract_one_value, npm, order_index,
                      order_lookup, spm)
from .bessel import BesselSequence, bessel_j_sequence, bessel_y_sequence
from .geometry import (EllipticGeometry, SingularCoordinateError, WaveParams,
                       algebraic_to_cartesian, elliptic_to_cartesian,
                       scale_factors, separation_parameters)
from .radial import (Kind, RadialArgs, RadialEval, dhpm, djpm, dypm, gpm, hpm,
                     jpm, radial_eval, spm_hyperbolic, ypm)
from .tridiag import (ConvergenceError, EigenDecomposition, InvalidSystemError,
                      TridiagonalSystem, eigen_decompose, symmetrize)

__version__ = "0.1.0"
