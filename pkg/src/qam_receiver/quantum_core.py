# Copyright 2025 The qam-receiver Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Primitive conventions and math shared by every other module.

Conventions:
    - Quadratures: <x> = Re(alpha), <p> = Im(alpha), vacuum variance 1/4
      per quadrature.
    - Photon flux: a constant residual amplitude gamma held over the unit
      symbol interval produces Poisson clicks with mean |gamma|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
import scipy.linalg
import scipy.special

from qam_receiver.receiver_exception import InvalidParameterException, InvariantViolationException
from qam_receiver.util import require_finite, require_positive

HOMODYNE_VARIANCE = 0.25
"""Vacuum variance of a single quadrature."""

CLICK_STATES = 4
"""Click counts 0, 1, 2 and the absorbing bucket 3+."""

_NORMALIZATION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ComplexAmplitude:
    """
    A coherent state amplitude in phase space.  |alpha|^2 is the mean
    photon number of the state.
    """

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise InvalidParameterException(
                message="Complex amplitude components must be finite, got ({}, {})".format(self.re, self.im)
            )

    @staticmethod
    def from_complex(value: complex) -> ComplexAmplitude:
        return ComplexAmplitude(re=float(value.real), im=float(value.imag))

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    def energy(self) -> float:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> ComplexAmplitude:
        return ComplexAmplitude(re=self.re, im=-self.im)

    def scaled(self, factor: float) -> ComplexAmplitude:
        return ComplexAmplitude(re=self.re * factor, im=self.im * factor)

    def __add__(self, other: ComplexAmplitude) -> ComplexAmplitude:
        return ComplexAmplitude(re=self.re + other.re, im=self.im + other.im)

    def __sub__(self, other: ComplexAmplitude) -> ComplexAmplitude:
        return ComplexAmplitude(re=self.re - other.re, im=self.im - other.im)


VACUUM = ComplexAmplitude(0.0, 0.0)


@dataclass(frozen=True)
class RateSequence:
    """
    Expected photon counts per symbol interval while nulling candidates 1..4.
    """

    rates: Tuple[float, float, float, float]

    def __post_init__(self):
        if len(self.rates) != CLICK_STATES:
            raise InvalidParameterException(
                message="A rate sequence holds exactly {} rates, got {}".format(CLICK_STATES, len(self.rates))
            )
        for rate in self.rates:
            if not math.isfinite(rate) or rate < 0:
                raise InvalidParameterException(message="Rates must be finite and non-negative, got {}".format(rate))

    @staticmethod
    @InvalidParameterException.recast(ValueError, TypeError)
    def of(rates: Iterable[float]) -> RateSequence:
        return RateSequence(rates=tuple(float(r) for r in rates))  # type: ignore[arg-type]

    def __getitem__(self, item):
        return self.rates[item]


@dataclass(frozen=True)
class ClickDistribution:
    """
    Distribution of the click count N over one symbol interval, with every
    count of three or more collapsed into `p3plus`.
    """

    p0: float
    p1: float
    p2: float
    p3plus: float

    def __post_init__(self):
        probabilities = self.as_tuple()
        for p in probabilities:
            if not (0.0 <= p <= 1.0):
                raise InvariantViolationException(message="Click probability out of range: {}".format(p))
        total = math.fsum(probabilities)
        if abs(total - 1.0) > _NORMALIZATION_TOLERANCE:
            raise InvariantViolationException(message="Click distribution sums to {}, not 1".format(total))

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return self.p0, self.p1, self.p2, self.p3plus

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    def __getitem__(self, clicks: int) -> float:
        return self.as_tuple()[min(clicks, CLICK_STATES - 1)]


def coherent_overlap(a: ComplexAmplitude, b: ComplexAmplitude) -> complex:
    """
    Inner product <a|b> = exp(-(|a|^2 + |b|^2)/2 + conj(a) b) of two coherent states.
    """
    exponent = -0.5 * (a.energy() + b.energy()) + a.as_complex().conjugate() * b.as_complex()
    return complex(np.exp(exponent))


def gaussian_tail(x: float) -> float:
    """
    Upper tail Q(x) = P(Z > x) of the standard normal distribution.
    """
    if math.isnan(x):
        raise InvalidParameterException(message="gaussian_tail is undefined for NaN")
    return float(0.5 * scipy.special.erfc(x / math.sqrt(2.0)))


def homodyne_pdf(alpha: ComplexAmplitude, x: float) -> float:
    """
    Density of a P-quadrature homodyne outcome: Normal(Im(alpha), 1/4).
    """
    require_finite(x, "x")
    deviation = x - alpha.im
    return math.exp(-deviation * deviation / (2.0 * HOMODYNE_VARIANCE)) / math.sqrt(2.0 * math.pi * HOMODYNE_VARIANCE)


def birth_process_generator(rates: RateSequence) -> np.ndarray:
    """
    4x4 lower-bidiagonal generator (column convention) of the click counter.
    State k moves to k+1 at rate rates[k]; state 3 (three or more clicks) is absorbing.
    """
    generator = np.zeros((CLICK_STATES, CLICK_STATES))
    for k in range(CLICK_STATES - 1):
        generator[k, k] = -rates[k]
        generator[k + 1, k] = rates[k]
    return generator


def click_distribution(rates: RateSequence, duration: float = 1.0) -> ClickDistribution:
    """
    Exact click count distribution of a pure-birth counting process whose rate
    is rates[k] after k clicks.

    The matrix exponential handles repeated (and zero) rates on the same code
    path as distinct ones.
    """
    require_positive(duration, "duration")
    if not isinstance(rates, RateSequence):
        rates = RateSequence.of(rates)

    propagator = scipy.linalg.expm(birth_process_generator(rates) * duration)
    p = np.clip(propagator[:, 0], 0.0, 1.0)
    p0, p1, p2 = float(p[0]), float(p[1]), float(p[2])
    p3plus = min(1.0, max(0.0, 1.0 - (p0 + p1 + p2)))
    return ClickDistribution(p0=p0, p1=p1, p2=p2, p3plus=p3plus)
