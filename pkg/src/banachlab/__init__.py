"""Numerical lab for regular, singular and divisor-of-zero elements of C[a,b], l-infinity and the disk algebra."""
from . import core, disk, interval, sequence  # noqa: F401  (registers dispatch rules)
from .core import (
    DEFAULT_CONFIG,
    BanachLabError,
    CertificationFailed,
    Classification,
    Config,
    NormBound,
    Status,
    Verdict,
    WitnessSequence,
    WitnessTerm,
    classify,
    is_unit,
    norm,
    phi,
    propagate_tdz_witness,
)
from .disk import BlaschkeProduct, ComplexPolynomial, DiskElement
from .interval import GridFunction, RealPolynomial
from .sequence import BoundedSequence, Tail

__all__ = [
    "DEFAULT_CONFIG",
    "BanachLabError",
    "BlaschkeProduct",
    "BoundedSequence",
    "CertificationFailed",
    "Classification",
    "ComplexPolynomial",
    "Config",
    "DiskElement",
    "GridFunction",
    "NormBound",
    "RealPolynomial",
    "Status",
    "Tail",
    "Verdict",
    "WitnessSequence",
    "WitnessTerm",
    "classify",
    "is_unit",
    "norm",
    "phi",
    "propagate_tdz_witness",
]
