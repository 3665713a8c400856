"""farey-lt: Farey fractions in residue classes and averaged trace statistics.

Modules:
    arith       exact integer/prime/polynomial primitives
    farey       coprime-pair enumeration and residue histograms mod p
    elliptic    curve families, specialization, traces of Frobenius
    quadratic   imaginary quadratic invariants and the power identity
    langtrotter averaged prime counters and Chebotarev-style tallies
    cli         the farey-lt command-line tool
"""

from . import arith, elliptic, farey, langtrotter, quadratic
from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "arith",
    "elliptic",
    "farey",
    "langtrotter",
    "quadratic",
]
