"""Gowers uniformity norms over F_p^n.

Statevector norm-estimation circuits, an exact classical reference engine,
phase-polynomial property testers and a 3-term-progression counting pipeline.
"""

from ._gowers import (  # noqa: F401
    ApEstimate,
    FunctionTable,
    GroupParams,
    PolynomialSpec,
    RunResult,
    SetInstance,
    TestPlan,
    Verdict,
    correlation,
    count_3aps_exact,
    estimate_exact,
    estimate_quantum_t3,
    fourier_coefficients,
    gowers_norm_bruteforce,
    gowers_u2_via_fourier,
    gowers_u3_via_fourier,
    haar_random_function,
    parse_polynomial,
    phase_function,
    plan_samples,
    random_polynomial,
    random_set,
    run_shifted,
    run_t3_hadamard,
    run_ud,
    run_ud_sampled,
    set_size_cap,
    size_cap,
    test_character_two_sided,
    test_degree_d_far,
    test_linear,
    u2_bounds,
)
from ._gowers import __version__  # noqa: F401
