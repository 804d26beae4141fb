"""Analysis of higher-order Markov chains given as stochastic transition tensors.

The heavy lifting lives in the C++ extension ``homc._core``; this package
re-exports its public surface.
"""

from homc._core import (  # noqa: F401
    BudgetError,
    CapacityError,
    Caps,
    ClassificationReport,
    ConvergenceDiagnostics,
    ErgodicityVerdict,
    IrreducibilityVerdict,
    JointDistribution,
    LimitKind,
    LimitOutcome,
    NoLimitError,
    PatternTrace,
    ReducedMatrix,
    RegularityVerdict,
    StateDistribution,
    StochasticTensor,
    Trajectory,
    ValidationReport,
    boxtimes,
    build_reduced,
    classify,
    closed_form_power,
    dumps,
    empirical_distribution,
    evolve,
    from_linear,
    identity_tensor,
    initial_dependent_limit,
    is_ergodic,
    is_irreducible,
    is_regular,
    kstep,
    limit_tensor,
    limiting_distribution,
    limiting_distribution_eig,
    loads,
    matricize,
    matrix_power,
    pattern_trace,
    q_regular,
    regular_via_q,
    sample_path,
    stationary_joint,
    to_linear,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
