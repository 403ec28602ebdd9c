"""
Calculations module: exponential sums, distances, Bochner-Fejer kernels and the separators
"""

from .exp_sums import (
    CoefficientProfile, ConstantProfile, PolynomialProfile, ExponentialProfile,
    ExpSum, eval_sum, fourier_coefficient, mean_coefficient, shift_sum,
    dumps_sum, loads_sum, random_sum
)
from .metrics import (
    MetricKind, MetricEstimate, SupShiftGrid, MeanValueEstimate,
    uniform_distance, stepanov_distance, weyl_distance, besicovitch_distance,
    mean_value, mean_leakage_bound, windowed_l1_bound, interior_sup_bound
)
from .bochner_fejer import (
    RationalBasis, BochnerFejerKernel, build_kernel, kernel_eval, kernel_closed_form,
    fejer_factor, convolve_exact, fit_profile, bf_approximate
)
from .ternary import ternary_level, is_in_I, levels_and_membership, ProgressionIq, progression_for_shift
from .separators import (
    SeparatorSpec, SeparatorFunction, WindowedNorm, separator_function, level_function,
    phi_l, separator_eval, partial_sum_f_m, theorem_bounds, holder_factor,
    gaussian_window_mass, separation_level_threshold, level_center, windowed_norm_at_centers
)
from .lemmas import (
    Lemma1Report, DiscrepancyReport, lemma1_bounds, bump_lipschitz, pigeonhole_pair,
    discrepancy_search, bump_triple_sum, lemma4_check, lemma4_scan
)

__all__ = [
    'CoefficientProfile', 'ConstantProfile', 'PolynomialProfile', 'ExponentialProfile',
    'ExpSum', 'eval_sum', 'fourier_coefficient', 'mean_coefficient', 'shift_sum',
    'dumps_sum', 'loads_sum', 'random_sum',
    'MetricKind', 'MetricEstimate', 'SupShiftGrid', 'MeanValueEstimate',
    'uniform_distance', 'stepanov_distance', 'weyl_distance', 'besicovitch_distance',
    'mean_value', 'mean_leakage_bound', 'windowed_l1_bound', 'interior_sup_bound',
    'RationalBasis', 'BochnerFejerKernel', 'build_kernel', 'kernel_eval', 'kernel_closed_form',
    'fejer_factor', 'convolve_exact', 'fit_profile', 'bf_approximate',
    'ternary_level', 'is_in_I', 'levels_and_membership', 'ProgressionIq', 'progression_for_shift',
    'SeparatorSpec', 'SeparatorFunction', 'WindowedNorm', 'separator_function', 'level_function',
    'phi_l', 'separator_eval', 'partial_sum_f_m', 'theorem_bounds', 'holder_factor',
    'gaussian_window_mass', 'separation_level_threshold', 'level_center', 'windowed_norm_at_centers',
    'Lemma1Report', 'DiscrepancyReport', 'lemma1_bounds', 'bump_lipschitz', 'pigeonhole_pair',
    'discrepancy_search', 'bump_triple_sum', 'lemma4_check', 'lemma4_scan',
]
