"""Box splines of complex degree: evaluation, Fourier symbols, refinement
masks, and the fractional-operator identities they satisfy."""

from ._core import (
    CxboxError,
    DirectionSet,
    Mask,
    binomial_tail_index,
    boxspline_eval,
    boxspline_recurrence_eval,
    boxspline_symbol,
    bspline_eval,
    bspline_fourier,
    bspline_recurrence_eval,
    complex_binomial,
    compute_mask,
    delta_train_symbol,
    derivative_symbol_check,
    difference_representation_eval,
    estimate_decay,
    gamma,
    log_gamma,
    mask_symbol,
    partition_of_unity_adaptive,
    partition_of_unity_residual,
    sample_boxspline,
    smoothness_exponents,
    spectrum_factors,
    tensor_kernel_eval,
    truncated_power,
    truncated_power_eval,
    truncated_power_kernel,
    truncated_power_symbol,
    verify,
    verify_spline_equation,
    verify_two_scale,
)

__all__ = [
    "CxboxError",
    "DirectionSet",
    "Mask",
    "binomial_tail_index",
    "boxspline_eval",
    "boxspline_recurrence_eval",
    "boxspline_symbol",
    "bspline_eval",
    "bspline_fourier",
    "bspline_recurrence_eval",
    "complex_binomial",
    "compute_mask",
    "delta_train_symbol",
    "derivative_symbol_check",
    "difference_representation_eval",
    "estimate_decay",
    "gamma",
    "log_gamma",
    "mask_symbol",
    "partition_of_unity_adaptive",
    "partition_of_unity_residual",
    "sample_boxspline",
    "smoothness_exponents",
    "spectrum_factors",
    "tensor_kernel_eval",
    "truncated_power",
    "truncated_power_eval",
    "truncated_power_kernel",
    "truncated_power_symbol",
    "verify",
    "verify_spline_equation",
    "verify_two_scale",
]

__version__ = "0.1.0"
