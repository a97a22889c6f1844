"""
Deep composite approximants G_{m,k} for functions with cusps.

A cusp term h(|x - a|^alpha) is replaced by P_m(phi_k(|x - a| / dmax)):
the division-free inner map phi_k approximates t^alpha and the outer
Chebyshev polynomial P_m interpolates the rescaled envelope
h(dmax^alpha u) on [0, 1]. The background H is interpolated directly.
Given the coefficients, evaluation uses additions and multiplications
only.
"""

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from src.libs.chebyshev import SYMMETRIC, UNIT, ChebPoly, cheb_interpolate
from src.libs.quadrature import PanelPartition, composite_rule
from src.libs.rootiter import Exponent, phi
from src.models import (
    CountConvention,
    CuspFunction,
    CuspTerm,
    ParamCount,
)

from .exceptions import InvalidDegreeError, UnknownConventionError

logger = logging.getLogger(__name__)

# Scalars charged per inner step under the inner-outer convention
DEFAULT_INNER_COEFFS = 1

# Least-squares refit sampling: panel order and grading toward the cusp
REFIT_ORDER = 128
REFIT_GRADING = 10


@dataclass(frozen=True)
class CuspLayer:
    """
    One evaluable term P(phi_k(dist(x, a) / dmax)).

    Attributes:
        outer: Outer polynomial on [0, 1]
        exponent: The cusp exponent
        a: Cusp location
        dmax: Distance normalizer
        inv_dmax: 1 / dmax, stored so evaluation only multiplies
        k: Inner iteration depth
    """

    outer: ChebPoly
    exponent: Exponent
    a: float
    dmax: float
    inv_dmax: float
    k: int

    def at_distance(self, t: Any) -> Any:
        """P(phi_k(t)) for a normalized distance t in [0, 1]."""
        return self.outer(phi(t, self.exponent, self.k))

    def __call__(self, x: Any) -> Any:
        return self.at_distance(abs(x - self.a) * self.inv_dmax)

    def to_dict(self) -> dict:
        return {
            "outer": self.outer.to_dict(),
            "r": self.exponent.r,
            "s": self.exponent.s,
            "a": self.a,
            "dmax": self.dmax,
            "k": self.k,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CuspLayer":
        dmax = float(data["dmax"])
        return cls(
            outer=ChebPoly.from_dict(data["outer"]),
            exponent=Exponent(data["r"], data["s"]),
            a=float(data["a"]),
            dmax=dmax,
            inv_dmax=1.0 / dmax,
            k=int(data["k"]),
        )


@dataclass(frozen=True)
class CompositeApproximant:
    """
    G_{m,k}(x) = H_m(x) + sum_j P_{m,j}(phi_k(|x - a_j| / dmax_j)).

    Attributes:
        background: H_m on [-1, 1]
        layers: One CuspLayer per cusp term
        m: Shared outer degree
        k: Shared inner depth
    """

    background: ChebPoly
    layers: tuple[CuspLayer, ...]
    m: int
    k: int

    def __call__(self, x: Any) -> Any:
        return evaluate(self, x)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "background": self.background.to_dict(),
            "layers": [layer.to_dict() for layer in self.layers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CompositeApproximant":
        return cls(
            background=ChebPoly.from_dict(data["background"]),
            layers=tuple(CuspLayer.from_dict(d) for d in data["layers"]),
            m=int(data["m"]),
            k=int(data["k"]),
        )

    @classmethod
    def from_json(cls, json_str: str) -> "CompositeApproximant":
        return cls.from_dict(json.loads(json_str))


def _check_degrees(m: int, k: int) -> None:
    if m < 0 or k < 0:
        raise InvalidDegreeError(
            f"degrees must be non-negative, got m={m}, k={k}"
        )


def _refit_outer(term: CuspTerm, m: int, k: int) -> ChebPoly:
    """Outer coefficients by weighted least squares in L^2(-1, 1)."""
    partition = PanelPartition.around(
        SYMMETRIC, [term.a], grading=REFIT_GRADING
    )
    panels = composite_rule(SYMMETRIC, partition, REFIT_ORDER)
    x = np.concatenate([nodes for nodes, _ in panels])
    w = np.concatenate([weights for _, weights in panels])
    inner = phi(np.abs(x - term.a) * term.inv_dmax, term.exponent, k)
    basis = npcheb.chebvander(UNIT.to_reference(inner), m)
    root_w = np.sqrt(w)
    coeffs, *_ = np.linalg.lstsq(
        basis * root_w[:, None], term(x) * root_w, rcond=None
    )
    return ChebPoly(tuple(coeffs), UNIT)


def build_layer(
    term: CuspTerm, m: int, k: int, refit: bool = False
) -> CuspLayer:
    """Fit the outer polynomial of one cusp term."""
    if refit:
        outer = _refit_outer(term, m, k)
    else:
        outer = cheb_interpolate(term.rescaled_envelope, m, UNIT)
    return CuspLayer(
        outer=outer,
        exponent=term.exponent,
        a=term.a,
        dmax=term.dmax,
        inv_dmax=term.inv_dmax,
        k=k,
    )


def build(
    f: CuspFunction, m: int, k: int, refit: bool = False
) -> CompositeApproximant:
    """
    Build G_{m,k} for f.

    Args:
        f: Target function
        m: Degree of H_m and of every outer polynomial
        k: Inner iteration depth
        refit: Fit outer polynomials by least squares on the composite
            instead of interpolating the envelopes

    Returns:
        The composite approximant

    Raises:
        InvalidDegreeError: If m or k is negative
        NonFiniteSampleError: If an envelope is not finite at a node
    """
    _check_degrees(m, k)
    background = cheb_interpolate(f.background, m, SYMMETRIC)
    layers = tuple(build_layer(term, m, k, refit) for term in f.terms)
    logger.debug(
        "composite_built: m=%s, k=%s, terms=%s, refit=%s",
        m,
        k,
        len(layers),
        refit,
    )
    return CompositeApproximant(
        background=background, layers=layers, m=m, k=k
    )


def evaluate(G: CompositeApproximant, x: Any) -> Any:
    """H_m(x) + sum of the cusp layers at x in [-1, 1]."""
    total = G.background(x)
    for layer in G.layers:
        total = total + layer(x)
    return total


def param_count(
    G: CompositeApproximant,
    convention: CountConvention | str = CountConvention.INNER_OUTER,
    inner_coeffs: int = DEFAULT_INNER_COEFFS,
) -> ParamCount:
    """
    Count free scalars.

    inner-outer: (m + 1) for H_m plus (m + 1) + c k per cusp term.
    outer-only: (m + 1) per cusp term; with no cusp terms H_m's m + 1.
    """
    try:
        convention = CountConvention(convention)
    except ValueError as e:
        raise UnknownConventionError(str(e)) from e
    outer = G.m + 1
    terms = len(G.layers)
    if convention is CountConvention.INNER_OUTER:
        n = outer + terms * (outer + inner_coeffs * G.k)
    else:
        n = terms * outer if terms else outer
    return ParamCount(convention=convention, n=n)


def balance(k: int, gamma: float | Fraction) -> int:
    """m = floor(gamma k), with gamma read as a nearby fraction."""
    if k < 0:
        raise InvalidDegreeError(f"k must be non-negative, got {k}")
    if not gamma > 0:
        raise InvalidDegreeError(f"gamma must be positive, got {gamma}")
    ratio = Fraction(gamma).limit_denominator(10**6)
    return math.floor(ratio * k)


def baseline_cheb(f: CuspFunction, N: int) -> ChebPoly:
    """Single-layer Chebyshev interpolant of f with N coefficients."""
    if N < 1:
        raise InvalidDegreeError(f"N must be >= 1, got {N}")
    return cheb_interpolate(f, N - 1, SYMMETRIC)
