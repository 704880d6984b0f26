"""archfactor: archimedean Gamma factors, pole bookkeeping and
zeta-regularized determinants for Hodge-numeric data.

The package answers one question from two independent directions and
checks that they agree: given the Hodge numbers of a smooth projective
variety over R or C, the completed alternating product of its
archimedean local factors equals, up to an explicit constant, the ratio
of zeta-regularized determinants of the scaling generator acting on the
even and odd parts of a graded cyclic homology theory.
"""

from .cyclic import (Progression, SpectralMeasure, a_to_e, e_to_a,
                     har_dim, har_dim_from_sequence, hc_dim, hc_dim_complex,
                     hn_dim, hp_dim, hp_real_dim, is_cyclic_pair,
                     is_pole_pair, same_spectrum, theta_spectrum,
                     weight_spectrum)
from .deligne import OutOfRegimeError, deligne_dim, pole_order
from .factors import completed_alternating_product, serre_factor
from .gamma import (Divisor, GammaExpression, SINGULARITY_GUARD,
                    SingularEvaluationError, divisor_of, evaluate_log,
                    gamma_c, gamma_r, identity, linear, loggamma_signed,
                    multiply, normalize, order_at, power, prefactor, render)
from .hodge import (HodgeData, PRESET_NAMES, Place, WeightPiece, betti,
                    betti_eigen, direct_sum, from_json_dict, preset,
                    to_json_dict, validate)
from .regdet import (DeterminantRatio, hurwitz_zeta_deriv0, regdet_measure,
                     regdet_progression)
from .verify import (SamplePoint, VerificationReport, compare_divisors,
                     verify_theorem)

__version__ = "0.1.0"

__all__ = [
    "Divisor", "DeterminantRatio", "GammaExpression", "HodgeData",
    "OutOfRegimeError", "PRESET_NAMES", "Place", "Progression",
    "SINGULARITY_GUARD", "SamplePoint", "SingularEvaluationError",
    "SpectralMeasure", "VerificationReport", "WeightPiece",
    "a_to_e", "betti", "betti_eigen", "compare_divisors",
    "completed_alternating_product", "deligne_dim", "direct_sum",
    "divisor_of", "e_to_a", "evaluate_log", "from_json_dict", "gamma_c",
    "gamma_r", "har_dim", "har_dim_from_sequence", "hc_dim",
    "hc_dim_complex", "hn_dim", "hp_dim", "hp_real_dim",
    "hurwitz_zeta_deriv0", "identity", "is_cyclic_pair", "is_pole_pair",
    "linear", "loggamma_signed", "multiply", "normalize", "order_at",
    "pole_order", "power", "prefactor", "preset", "regdet_measure",
    "regdet_progression", "render", "same_spectrum", "serre_factor",
    "theta_spectrum", "to_json_dict", "validate", "verify_theorem",
    "weight_spectrum",
]
