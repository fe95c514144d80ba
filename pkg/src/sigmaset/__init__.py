"""Finite sigma-sets: atoms with antielements, fusion with annihilation,
ordered pairs, sigma-functions, and brute-force checkers."""

from .algebra import (
    SpaceSpec,
    anti_intersect,
    antiset,
    difference,
    fuse,
    fuse_singletons,
    generated_space,
    integer_space,
    intersect,
    power_set,
    require_antiset,
    star_difference,
)
from .core import (
    EMPTY,
    Atom,
    Polarity,
    SigmaSet,
    Undefined,
    antielement,
    make_set,
    member,
    plain,
    render,
    star,
    starred,
    subset,
    theta,
)
from .errors import SigmaError
from .evaluate import EvalError, evaluate, evaluate_text, render_value
from .functions import (
    SigmaFunction,
    antidentity,
    antifunction,
    antinverse,
    build_diagram,
    classify,
    compose,
    identity,
    inverse,
    make_function,
)
from .pairs import OrderedPair, cartesian_product, pair, unpair
from .syntax import ParseError, parse, unparse

__version__ = "0.1.0"
