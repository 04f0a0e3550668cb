"""Character and exponential sums over generalized arithmetic progressions."""

try:
    from . import _gapsums as _core  # installed layout: extension inside the package
except ImportError:  # in-tree test layout: extension on sys.path
    import _gapsums as _core

__all__ = [
    "DirichletCharacter",
    "Gap",
    "InvariantViolation",
    "IOError",
    "Polynomial",
    "PreconditionError",
    "ResourceError",
    "SamplingError",
    "char_fourier",
    "character",
    "character_sum_over_gap",
    "characters",
    "count_solutions",
    "counterexample_demo",
    "distinct_elements",
    "enumerate_elements",
    "fourier_profile",
    "gap_fourier_coefficient",
    "gauss_sum",
    "is_proper_enumeration",
    "is_proper_kernel",
    "l1_bound",
    "l1_norm",
    "multilinear_character_sum",
    "poly_exp_sum_over_gap",
    "random_proper_gap",
    "solution_bound",
    "sweep",
    "weil_complete_sum_check",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name, _core
