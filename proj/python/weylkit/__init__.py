"""Displacement-operator measures for qudit registers and truncated CV modes.

The heavy lifting happens in the compiled extension ``weylkit._core``;
this package re-exports its functions. States are passed as a
``dims`` list plus a complex amplitude array in big-endian basis order
(the last qudit is the fastest-running digit).
"""

from weylkit._core import (
    apply_displacement,
    coherent_state,
    cross_fidelity,
    cv_displacement,
    cv_swap_quadrature,
    displacement_distribution,
    displacement_matrix,
    exact_swap,
    expectation,
    negativity,
    partial_transpose,
    purity_estimator,
    random_stabilizer_state,
    random_state,
    reduced_density,
    renyi2,
    renyi2_oracle,
    stabilizer_renyi,
    stabilizer_renyi_shannon,
    swap_by_displacements,
    transpose_by_displacements,
    weyl_entropy,
    weyl_function,
)

__all__ = [
    "apply_displacement",
    "coherent_state",
    "cross_fidelity",
    "cv_displacement",
    "cv_swap_quadrature",
    "displacement_distribution",
    "displacement_matrix",
    "exact_swap",
    "expectation",
    "negativity",
    "partial_transpose",
    "purity_estimator",
    "random_stabilizer_state",
    "random_state",
    "reduced_density",
    "renyi2",
    "renyi2_oracle",
    "stabilizer_renyi",
    "stabilizer_renyi_shannon",
    "swap_by_displacements",
    "transpose_by_displacements",
    "weyl_entropy",
    "weyl_function",
]

__version__ = "0.1.0"
