"""Leading-order transfer of n-coherent information at interaction onset.

Library layout:

* qmat       -- dense complex matrix core (tensor algebra, partial trace,
                eigendecomposition, exact evolution)
* renyi      -- n-Renyi entropies, purities, spectrum reconstruction
* onset      -- n-durability, n-exposure, perturbative second derivatives
* channels   -- exact channel evolution, tripartite simulation, UDW model
* statespace -- qubit/qutrit families, spin-1 operators, scans, isocurves
* cli        -- the `exposure-lab` command-line surface
"""

from .channels import (
    FockTruncation,
    TimeSeries,
    TimeSeriesPoint,
    TripartiteState,
    UdwQubitParams,
    coherent_info_timeseries,
    fock_truncation,
    fock_udw_oracle,
    product_channel_state,
    purify,
    udw_closed_forms,
    udw_eigen,
    udw_entropy_timeseries,
    udw_qubit_state,
)
from .errors import (
    DimensionError,
    ExposureLabError,
    InconsistentPuritiesError,
    InvalidArgumentError,
    InvalidOperatorError,
    InvalidStateError,
    NoSolutionError,
    NumericalFailure,
    RankDeficientStateError,
    TruncationError,
)
from .onset import (
    GeneralHamiltonian,
    OnsetReport,
    ProductHamiltonian,
    qutrit_spectrum_slice,
    delta_coherent_info,
    durability,
    epsilon_second_derivative,
    exposure,
    onset_report,
    purity_derivatives_general,
    renyi_second_derivative,
    trace_term_scan,
    variance,
    vn_second_derivative_fullrank,
)
from .qmat import (
    EigenDecomposition,
    commutator,
    evolve,
    hermitian_eig,
    matrix_power,
    partial_trace,
    tensor_product,
)
from .renyi import (
    VON_NEUMANN,
    RenyiIndex,
    n_purity,
    renyi_bounds_check,
    renyi_entropy,
    spectrum_from_purities,
    von_neumann,
)
from .statespace import (
    QubitParams,
    QutritParams,
    ScanRecord,
    entropy_isocurve_qubit,
    extremize_exposure_on_isocurve,
    qubit_state,
    qutrit_state,
    scan_exposure,
    spin1_operator,
)

__version__ = "0.1.0"
