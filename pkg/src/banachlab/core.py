"""Algebra-agnostic vocabulary: certified bounds, verdicts, witness sequences.

The generic operations here (:func:`phi`, :func:`norm`, :func:`classify`) are
single-dispatch functions; each algebra module registers its element types
when imported.  Import :mod:`banachlab` rather than this module directly to be
sure all three algebras are registered.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from functools import singledispatch
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

_EPS = 2.0**-52


class BanachLabError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedAlgebra(BanachLabError, TypeError):
    pass


class CertificationFailed(BanachLabError):
    """Refinement budget exhausted before the enclosure met its tolerance."""

    def __init__(self, message: str, bound: Optional["NormBound"] = None):
        super().__init__(message)
        self.bound = bound


class NotAZeroDivisor(BanachLabError, ValueError):
    pass


class NotAZero(BanachLabError, ValueError):
    pass


class NotATDZ(BanachLabError, ValueError):
    pass


class NotRegular(BanachLabError, ValueError):
    pass


class NotUnimodular(BanachLabError, ValueError):
    pass


class OutsideDomain(BanachLabError, ValueError):
    pass


class NotRepresentable(BanachLabError, ValueError):
    """The result of an operation leaves the representable subclass."""


@dataclass(frozen=True)
class Config:
    """Tolerance and budget knobs shared by every certified computation."""

    abs_tol: float = 1e-9
    circle_samples: int = 1024
    refine_max_iters: int = 64

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.circle_samples < 8:
            raise ValueError("circle_samples must be at least 8")
        if self.refine_max_iters < 1:
            raise ValueError("refine_max_iters must be at least 1")

    def to_dict(self) -> dict:
        return {
            "abs_tol": self.abs_tol,
            "circle_samples": self.circle_samples,
            "refine_max_iters": self.refine_max_iters,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        known = {k: data[k] for k in ("abs_tol", "circle_samples", "refine_max_iters") if k in data}
        unknown = set(data) - set(known)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**known)


DEFAULT_CONFIG = Config()


@dataclass(frozen=True)
class NormBound:
    """Closed enclosure ``[lo, hi]`` of a non-negative quantity."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("NormBound endpoints must not be NaN")
        object.__setattr__(self, "lo", max(float(self.lo), 0.0))
        object.__setattr__(self, "hi", float(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"NormBound requires lo <= hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: float) -> "NormBound":
        return cls(float(value), float(value))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= value <= self.hi + slack

    def overlaps(self, other: "NormBound", slack: float = 0.0) -> bool:
        return self.lo <= other.hi + slack and other.lo <= self.hi + slack

    def scaled(self, factor: float) -> "NormBound":
        factor = abs(factor)
        return NormBound(self.lo * factor, self.hi * factor)

    def is_zero(self) -> bool:
        return self.lo == 0.0 and self.hi == 0.0

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}


class Status(str, enum.Enum):
    PROVED = "Proved"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    certificate: Optional[dict] = None
    citations: tuple = ()

    @classmethod
    def proved(cls, reason, certificate=None, cite=()):
        return cls(Status.PROVED, reason, certificate, _as_tuple(cite))

    @classmethod
    def refuted(cls, reason, certificate=None, cite=()):
        return cls(Status.REFUTED, reason, certificate, _as_tuple(cite))

    @classmethod
    def unknown(cls, reason, certificate=None):
        return cls(Status.UNKNOWN, reason, certificate)

    @property
    def is_proved(self) -> bool:
        return self.status is Status.PROVED

    @property
    def is_refuted(self) -> bool:
        return self.status is Status.REFUTED

    def negated(self, reason: str, cite=()) -> "Verdict":
        """Verdict for the complementary statement."""
        if self.status is Status.UNKNOWN:
            return Verdict.unknown(reason, self.certificate)
        status = Status.REFUTED if self.status is Status.PROVED else Status.PROVED
        return Verdict(status, reason, self.certificate, _as_tuple(cite) or self.citations)

    def to_dict(self) -> dict:
        out = {"status": self.status.value, "reason": self.reason, "citations": list(self.citations)}
        if self.certificate is not None:
            out["certificate"] = _jsonable(self.certificate)
        return out


def _as_tuple(cite) -> tuple:
    if isinstance(cite, str):
        return (cite,)
    return tuple(cite)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, NormBound):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if hasattr(obj, "item") and callable(obj.item):  # numpy scalars
        return _jsonable(obj.item())
    return obj


@dataclass(frozen=True)
class Classification:
    regular: Verdict
    zero_divisor: Verdict
    topological_divisor: Verdict
    singular: Verdict

    def verdicts(self) -> dict:
        return {
            "regular": self.regular,
            "zero_divisor": self.zero_divisor,
            "topological_divisor": self.topological_divisor,
            "singular": self.singular,
        }

    def has_unknown(self) -> bool:
        return any(v.status is Status.UNKNOWN for v in self.verdicts().values())

    def coherence_violations(self) -> list:
        """Names of violated structural implications (empty when coherent)."""
        bad = []
        if self.regular.is_proved:
            for name in ("zero_divisor", "topological_divisor", "singular"):
                if not getattr(self, name).is_refuted:
                    bad.append(f"regular Proved but {name} not Refuted")
        if self.topological_divisor.is_proved and not self.singular.is_proved:
            bad.append("topological_divisor Proved but singular not Proved")
        if self.zero_divisor.is_proved and not self.topological_divisor.is_proved:
            bad.append("zero_divisor Proved but topological_divisor not Proved")
        return bad

    def to_dict(self) -> dict:
        return {k: v.to_dict() for k, v in self.verdicts().items()}


@dataclass(frozen=True)
class WitnessTerm:
    index: int
    element: Any
    unit_norm: Optional[NormBound]
    product_norm: NormBound


@dataclass(frozen=True)
class WitnessSequence:
    """Indexed family ``n -> (z_n, ||z_n|| certificate, ||x z_n|| certificate)``.

    ``monotone_from`` declares the index beyond which product-norm
    certificates are non-increasing.
    """

    description: str
    generator: Callable[[int], WitnessTerm]
    monotone_from: int = 1
    metadata: dict = field(default_factory=dict)

    def __call__(self, n: int) -> WitnessTerm:
        if n < 1:
            raise ValueError("witness indices start at 1")
        return self.generator(n)

    def terms(self, indices: Iterable[int]) -> Iterator[WitnessTerm]:
        for n in indices:
            yield self(n)


# ---------------------------------------------------------------------------
# generic operations, filled in by the algebra modules


@singledispatch
def norm(element, config: Config = DEFAULT_CONFIG) -> NormBound:
    """Certified enclosure of the algebra norm of ``element``."""
    raise UnsupportedAlgebra(f"no norm for {type(element).__name__}")


@singledispatch
def phi(element, config: Config = DEFAULT_CONFIG) -> NormBound:
    """Enclosure of ``inf ||element * b||`` over unit-norm ``b``.

    The infimum vanishes exactly on topological divisors of zero.
    """
    raise UnsupportedAlgebra(f"no phi for {type(element).__name__}")


@singledispatch
def classify(element, config: Config = DEFAULT_CONFIG) -> Classification:
    raise UnsupportedAlgebra(f"no classifier for {type(element).__name__}")


@singledispatch
def is_unit(element) -> bool:
    """True when ``element`` is exactly the multiplicative identity."""
    return False


PROPAGATION_CITE = "in a commutative Banach algebra, a multiple y*x of a topological divisor of zero x is again one"
CLOSEDNESS_CITE = "phi(a) = inf over unit b of ||ab|| is continuous, so the topological divisors of zero form a closed set"


def propagate_tdz_witness(w: WitnessSequence, y, config: Config = DEFAULT_CONFIG) -> WitnessSequence:
    """Turn a witness for ``x`` into a witness for ``x*y``.

    Uses ``||(xy) z_n|| <= ||y|| ||x z_n||``; valid in all three algebras since
    they are commutative.
    """
    if is_unit(y):
        return replace(w, description=f"{w.description} (times unit)")
    ynorm = norm(y, config).hi

    def gen(n: int) -> WitnessTerm:
        t = w(n)
        return WitnessTerm(t.index, t.element, t.unit_norm, NormBound(0.0, ynorm * t.product_norm.hi))

    return WitnessSequence(
        description=f"{w.description}; propagated through a factor of norm <= {ynorm:.6g}",
        generator=gen,
        monotone_from=w.monotone_from,
        metadata={**w.metadata, "factor_norm_hi": ynorm},
    )


def phi_lipschitz_check(f, h, config: Config = DEFAULT_CONFIG) -> Verdict:
    """Check ``|phi(f+h) - phi(f)| <= ||h||`` up to twice the enclosure width plus rounding."""
    pf = phi(f, config)
    pfh = phi(f + h, config)
    hn = norm(h, config)
    # f + h is itself rounded, so allow a few ulps on top of the enclosure widths
    slack = 2.0 * max(pf.width, pfh.width, hn.width) + 8 * _EPS * max(pf.hi, pfh.hi, hn.hi)
    diff = abs(pfh.mid - pf.mid)
    cert = {"phi_f": pf, "phi_f_plus_h": pfh, "norm_h": hn, "difference": diff, "slack": slack}
    if diff <= hn.hi + slack:
        return Verdict.proved("phi moved by at most ||h||", cert, CLOSEDNESS_CITE)
    return Verdict.refuted("phi moved by more than ||h||", cert, CLOSEDNESS_CITE)


def unit_verdicts(regular: Verdict, zero_divisor: Verdict, tdz: Verdict, cite_singular: Sequence[str] = ()) -> Classification:
    """Assemble a Classification, deriving ``singular`` from ``regular``."""
    singular = regular.negated(
        "singular means not regular" if regular.status is not Status.UNKNOWN else "regularity undecided",
        cite=cite_singular or regular.citations,
    )
    return Classification(regular, zero_divisor, tdz, singular)
