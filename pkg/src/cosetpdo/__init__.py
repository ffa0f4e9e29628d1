"""Fourier calculus, quantization and trace identities on quotients of finite groups."""

__version__ = "0.1.0"

from .catalog import available_groups, load_entry
from .fourier import (CosetFunction, FourierCoefficients, forward_transform,
                      inverse_transform, lq_norm, plancherel_norm)
from .groups import (CosetSpace, DualObject, FiniteGroup, GroupError, Irrep,
                     Subgroup, average_over_subgroup, coset_space, dual_object,
                     h_projection, subgroup, verify_irrep)
from .heat import (heat_operator, heat_symbol, heat_trace,
                   laplacian_from_generators)
from .nuclear import (adjoint_operator, kernel_diagonal_trace,
                      kernel_factorization, nuclear_trace_via_symbol,
                      nuclearity_report, product_symbol, sufficiency_functional)
from .quantize import (LinearOperator, MatrixSymbol, apply_operator,
                       identity_symbol, op_from_symbol, symbol_from_operator)
from .schatten import (SchattenReport, fractional_modulus, hs_norm_via_symbol,
                       schatten_criterion_check, schatten_norm, singular_values)
