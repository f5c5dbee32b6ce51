"""Enumeration of Hermitian polar spaces and line Grassmann codes.

The package provides closed-form prefix counting, rank/unrank
enumeration of isotropic points and totally isotropic lines over
GF(q^2), and an encoder, local decoder and majority-vote corrector for
the associated line Grassmann codes, all without materializing a
generator matrix.
"""

from .codec import CodeParams, LineCode, code_params
from .gf import GF
from .geometry import (form, herm_product, is_isotropic_line,
                       is_isotropic_point, num_lines, num_points)
from .line_enum import count_lines_with_prefix, line_rank, line_unrank
from .oracle import GuardError, OracleReport, selftest
from .point_enum import count_points_with_prefix, point_rank, point_unrank

__all__ = [
    "GF",
    "CodeParams",
    "LineCode",
    "code_params",
    "form",
    "herm_product",
    "is_isotropic_point",
    "is_isotropic_line",
    "num_points",
    "num_lines",
    "count_points_with_prefix",
    "point_rank",
    "point_unrank",
    "count_lines_with_prefix",
    "line_rank",
    "line_unrank",
    "GuardError",
    "OracleReport",
    "selftest",
]

__version__ = "0.1.0"
