"""Invariants and p-rank stratification of genus-2 curves over F_q, p odd.

The library computes Cartier-Manin data (p-rank, a-number, stratum) and
Igusa / absolute invariants of models y^2 = f(x), and exhaustively
stratifies the moduli space of genus-2 curves over a small finite field by
enumerating all 3*q^5 monic models.
"""

from .cartier import (CartierData, NON_ORDINARY, ORDINARY, SUPERSINGULAR,
                      SUPERSPECIAL, cartier_matrix, classify, semilinear_power)
from .errors import G2StrataError
from .field import (FieldCtx, Fq, cube_root, embed, frobenius, make_field,
                    roots, sixth_root, sqrt)
from .forms import SexticForm
from .igusa import (G2Triple, IgusaPoint, g2_invariants, g2_of_form,
                    igusa_invariants, is_smooth, weighted_equal)
from .models import (GL2Elt, construct_nonordinary, gl2_transform,
                     howe_supersingular, seven_family)
from .poly import IntPolyTable, Poly, eval_table, half_power, load_tables
from .stratify import (StrataCounts, StrataTable, enumerate_models,
                       merge_and_report, run_stratification, stratify_field,
                       superspecial_report, verify_strata_formulas,
                       verify_theorem1)

__version__ = "0.1.0"
