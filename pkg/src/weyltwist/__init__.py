"""Twisted conjugacy classes in Weyl groups of simple root systems.

The main entry points are :func:`build_root_system`, :func:`enumerate_weyl`,
:func:`twisted_classes`, :func:`compute_M_theta`, :func:`enumerate_I_theta`
and :func:`verify_classification`.
"""

from .classify import (
    ClassificationReport,
    compute_I_m,
    enumerate_I_theta,
    has_property1,
    has_property2,
    verify_classification,
)
from .kernels import BACKEND
from .rootsys import RootSystem, RootSystemError, RootSystemSpec, build_root_system, inner_product, reflect
from .twist import (
    AutomorphismError,
    DiagramAutomorphism,
    compute_M_theta,
    delta0,
    dimension_formula,
    is_twisted_involution,
    make_automorphism,
    rank_one_minus_wtheta,
    resolve_automorphism,
    twist_element,
    twisted_classes,
)
from .weyl import (
    CapExceeded,
    WeylElement,
    WeylGroup,
    enumerate_weyl,
    length,
    longest_element,
    multiply,
    parabolic_longest,
    reduced_word,
    simple_reflection,
)

__version__ = "0.1.0"
