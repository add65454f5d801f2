"""polyrel: exact verification engine for polylogarithm functional equations."""

from .exact import (
    DomainError,
    RationalFactorization,
    SampleSpaceExhausted,
    SplitMix64,
    factor_rational,
    random_rational,
)
from .expr import ParseError, parse_expression
from .formal import Automorphism, FormalSum, group_closure, inversion_class_key, orbit
from .numeric import (
    BranchAmbiguityError,
    PoleError,
    PrecisionPolicy,
    bernoulli,
    cl_apply,
    cl_m,
    li_m,
    poly_roots,
    zeta_int,
)
from .poly import MultiPoly
from .ratfunc import INDETERMINATE, INFINITY, POLE, RatFunc, ZeroDenominator, cross_ratio

__version__ = "0.1.0"


# high-level API, imported lazily so that `import polyrel` stays light
_LAZY_API = {
    "get_equation": ("polyrel.catalog", "get_equation"),
    "equation_names": ("polyrel.catalog", "equation_names"),
    "EquationSpec": ("polyrel.catalog", "EquationSpec"),
    "kernel_test": ("polyrel.criterion", "kernel_test"),
    "beta_pairing": ("polyrel.criterion", "beta_pairing"),
    "verify_numeric": ("polyrel.verify", "verify_numeric"),
    "run_acceptance": ("polyrel.report", "run_acceptance"),
    "verify_identities": ("polyrel.proofalgebra", "verify_identities"),
    "verify_claim_and_theorem": ("polyrel.proofalgebra", "verify_claim_and_theorem"),
    "group_generators": ("polyrel.checks", "group_generators"),
}


def __getattr__(name):
    if name in _LAZY_API:
        import importlib

        module, attr = _LAZY_API[name]
        return getattr(importlib.import_module(module), attr)
    raise AttributeError(f"module 'polyrel' has no attribute {name!r}")

__all__ = [
    "DomainError",
    "RationalFactorization",
    "SampleSpaceExhausted",
    "SplitMix64",
    "factor_rational",
    "random_rational",
    "ParseError",
    "parse_expression",
    "Automorphism",
    "FormalSum",
    "group_closure",
    "inversion_class_key",
    "orbit",
    "BranchAmbiguityError",
    "PoleError",
    "PrecisionPolicy",
    "bernoulli",
    "cl_apply",
    "cl_m",
    "li_m",
    "poly_roots",
    "zeta_int",
    "MultiPoly",
    "RatFunc",
    "INDETERMINATE",
    "INFINITY",
    "POLE",
    "ZeroDenominator",
    "cross_ratio",
    "__version__",
]
