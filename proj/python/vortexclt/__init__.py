"""Point-vortex Gibbs ensembles and their Gaussian limits."""

from ._core import (
    __version__,
    bessel_j_zeros,
    bessel_jn,
    bessel_k0,
    bessel_k1,
    disk_gbar,
    disk_green,
    estimate_z,
    gaussian_partition_function,
    lattice_sum,
    run_cli,
    sample_gibbs,
    sphere_green,
    torus_green,
)

__all__ = [
    "__version__",
    "bessel_j_zeros",
    "bessel_jn",
    "bessel_k0",
    "bessel_k1",
    "disk_gbar",
    "disk_green",
    "estimate_z",
    "gaussian_partition_function",
    "lattice_sum",
    "run_cli",
    "sample_gibbs",
    "sphere_green",
    "torus_green",
]
