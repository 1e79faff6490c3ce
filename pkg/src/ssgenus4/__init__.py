"""Point counts and character-sum spectra of genus-4 hyperelliptic curves of
2-rank zero over F_{2^n}, n odd.

Three cooperating views of the same objects:

- ``field`` / ``curves``: exact F_{2^n} arithmetic and the character sum
  S = N - (q + 1) of y^2 + y = f x^9 + a x^5 + b x^3 + c x + d.
- ``quadform``: the characteristic-2 quadratic form Q(x) = Tr(f x^9 + a x^5
  + b x^3 + c x), its radical, and the predicted |S|.
- ``weil``: supersingular Frobenius characteristic polynomials and the
  degree-8 product enumeration bounding the same spectrum from the
  abelian-variety side.

Hot kernels live in a compiled extension with a bit-identical pure-Python
fallback; see ``ssgenus4.backend``.
"""

__version__ = "0.1.0"

from .backend import BACKEND
from .curves import (
    CurveParams,
    RankZeroForm,
    SpectrumRecord,
    char_sum_S,
    classify_curve,
    count_points_direct,
    count_points_fast,
    is_supersingular_form,
    spectrum_values,
)
from .field import FieldSpec, field_from_json, make_field
from .quadform import (
    FormProfile,
    QuadraticFormSpec,
    classify_form,
    eval_Q,
    kernel_W,
    linearized_L,
    polarize,
    radical_oracle,
)
from .scan import ScanConfig, ScanSummary, draw_coefficients, run_scan
from .weil import (
    FactorMultiset,
    WeilPoly,
    enumerate_products,
    filter_by_serre,
    hw_serre_bound,
    reduced_frobver_poly,
    resultant,
    simple_ss_factors,
    sx_check,
)

__all__ = [
    "BACKEND",
    "CurveParams",
    "FactorMultiset",
    "FieldSpec",
    "FormProfile",
    "QuadraticFormSpec",
    "RankZeroForm",
    "ScanConfig",
    "ScanSummary",
    "SpectrumRecord",
    "WeilPoly",
    "char_sum_S",
    "classify_curve",
    "classify_form",
    "count_points_direct",
    "count_points_fast",
    "draw_coefficients",
    "enumerate_products",
    "eval_Q",
    "field_from_json",
    "filter_by_serre",
    "hw_serre_bound",
    "is_supersingular_form",
    "kernel_W",
    "linearized_L",
    "make_field",
    "polarize",
    "radical_oracle",
    "reduced_frobver_poly",
    "resultant",
    "run_scan",
    "simple_ss_factors",
    "spectrum_values",
    "sx_check",
]
