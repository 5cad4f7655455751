"""Ideals of imaginary quadratic orders inside the Hurwitz quaternions."""

from .hurwitz import HurwitzQuaternion, RationalQuaternion
from .orders import QuadraticOrder, make_order, three_squares
from .ideals import Ideal, ZBasis, ideal, multiply, reduce
from .forms import BinaryQuadraticForm

__version__ = "0.1.0"

__all__ = [
    "BinaryQuadraticForm",
    "HurwitzQuaternion",
    "Ideal",
    "QuadraticOrder",
    "RationalQuaternion",
    "ZBasis",
    "ideal",
    "make_order",
    "multiply",
    "reduce",
    "three_squares",
]
