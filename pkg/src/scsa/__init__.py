"""Semi-classical signal analysis.

A nonnegative pulse-shaped signal y is read as the potential of the
Schrodinger operator -d2/dx2 - chi*y. Its negative eigenvalues -kappa_n**2
and L2-normalized eigenfunctions psi_n give the reconstruction

    y_chi = (4/chi) * sum_n kappa_n * psi_n**2,

which is exact when chi*y is reflectionless.
"""

from .chi_search import (
    Plateau,
    SweepPoint,
    find_plateau,
    optimize_chi,
    sweep,
    weyl_chi_for_target,
)
from .core import (
    SchrodingerSpectrum,
    ScsaResult,
    analyze,
    assemble_hamiltonian,
    momenta,
    mse,
    negative_spectrum,
    quantization_levels,
    reconstruct,
    reflectionless_deficit,
)
from .decomposition import PulseSplit, split
from .errors import ScsaError
from .kernels import BACKEND
from .signals import (
    Grid,
    ShiftedSignal,
    Signal,
    generate,
    load_csv,
    make_grid,
    save_csv,
    shift_nonnegative,
)
from .soliton import (
    SolitonModel,
    nsoliton_signal,
    poschl_teller_chi,
    poschl_teller_kappas,
)
from .spectral import DiffMatrix, EigenDecomposition, build_d2, eig_sym

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DiffMatrix",
    "EigenDecomposition",
    "Grid",
    "Plateau",
    "PulseSplit",
    "SchrodingerSpectrum",
    "ScsaError",
    "ScsaResult",
    "ShiftedSignal",
    "Signal",
    "SolitonModel",
    "SweepPoint",
    "analyze",
    "assemble_hamiltonian",
    "build_d2",
    "eig_sym",
    "find_plateau",
    "generate",
    "load_csv",
    "make_grid",
    "momenta",
    "mse",
    "negative_spectrum",
    "nsoliton_signal",
    "optimize_chi",
    "poschl_teller_chi",
    "poschl_teller_kappas",
    "quantization_levels",
    "reconstruct",
    "reflectionless_deficit",
    "save_csv",
    "shift_nonnegative",
    "split",
    "sweep",
    "weyl_chi_for_target",
]
