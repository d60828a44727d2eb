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

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from qam_receiver.constellation import NullingOrder, QAM16_MEAN_LEVEL_ENERGY
from qam_receiver.logging.events import ReceiverEvent
from qam_receiver.receiver import ReceiverConfig, total_error
from qam_receiver.receiver_exception import InvalidParameterException
from qam_receiver.util import receiver_logger, require_photon_number, require_positive

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQUARE = (3.0 - math.sqrt(5.0)) / 2.0

DEFAULT_BETA_TOL = 1e-6
DEFAULT_GRID_POINTS = 41
MIN_GRID_POINTS = 41
BRACKET_MARGIN = 2.0

# Displacements whose error beats beta = 0 by less than this are treated as ties.
_TIE_TOLERANCE = 1e-15


@dataclass(frozen=True)
class BetaResult:
    nbar: float
    beta_star: float
    beta_star_sq: float
    error_at_beta: float
    error_at_zero: float


def default_bracket(nbar: float) -> Tuple[float, float]:
    """
    [-3s/sqrt(2) - 2, 3s/sqrt(2) + 2]: reaches past the outermost candidates of the nulling arm.
    """
    scale = math.sqrt(require_photon_number(nbar) / QAM16_MEAN_LEVEL_ENERGY)
    reach = 3.0 * scale / math.sqrt(2.0) + BRACKET_MARGIN
    return -reach, reach


def golden_section_search(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> Tuple[float, float, float, float]:
    """
    Golden-section search for a minimum of `f` inside [a, b].

    Returns the final interval (lo, hi) with hi - lo <= tol, and the best
    evaluated point with its value.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return a, b, x, f(x)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return a, d, c, yc
    return c, b, d, yd


def beta_grid(bracket: Tuple[float, float], points: int) -> np.ndarray:
    """
    Uniform grid over the bracket, always containing beta = 0.
    """
    grid = np.linspace(bracket[0], bracket[1], points)
    return np.union1d(grid, [0.0])


def optimize_beta(
    nbar: float,
    bracket: Optional[Tuple[float, float]] = None,
    tol: float = DEFAULT_BETA_TOL,
    grid_points: int = DEFAULT_GRID_POINTS,
    order: NullingOrder = NullingOrder.ASCENDING,
    refine: bool = True,
) -> BetaResult:
    """
    Find the displacement beta minimizing the Type II error at `nbar`.

    A coarse grid scan picks the best basin; golden-section search then
    polishes within the neighbouring grid cells (skipped when `refine` is
    False).  The returned point is never worse than the best grid point, nor
    than beta = 0.
    """
    nbar = require_photon_number(nbar)
    require_positive(tol, "tol")
    if bracket is None:
        bracket = default_bracket(nbar)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise InvalidParameterException(message="Search bracket must be a non-empty interval, got {}".format(bracket))
    if not lo <= 0.0 <= hi:
        raise InvalidParameterException(message="Search bracket must contain 0, got {}".format(bracket))
    if grid_points < MIN_GRID_POINTS:
        raise InvalidParameterException(
            message="At least {} grid points are required, got {}".format(MIN_GRID_POINTS, grid_points)
        )

    def objective(beta: float) -> float:
        return total_error(ReceiverConfig.type_ii(nbar=nbar, beta=beta, order=order))

    grid = beta_grid((lo, hi), grid_points)
    grid_errors = np.array([objective(float(beta)) for beta in grid])
    best = int(np.argmin(grid_errors))
    best_beta, best_error = float(grid[best]), float(grid_errors[best])

    if refine:
        cell_lo = float(grid[max(best - 1, 0)])
        cell_hi = float(grid[min(best + 1, len(grid) - 1)])
        _, _, refined_beta, refined_error = golden_section_search(objective, cell_lo, cell_hi, tol)
        if refined_error < best_error:
            best_beta, best_error = refined_beta, refined_error

    error_at_zero = objective(0.0)
    if not best_error < error_at_zero - _TIE_TOLERANCE:
        best_beta, best_error = 0.0, error_at_zero

    result = BetaResult(
        nbar=nbar,
        beta_star=best_beta,
        beta_star_sq=best_beta * best_beta,
        error_at_beta=best_error,
        error_at_zero=error_at_zero,
    )
    receiver_logger.debug(
        msg="Optimal displacement found",
        event=ReceiverEvent.BETA_OPTIMIZED,
        context={"nbar": nbar, "beta_star": best_beta, "error_at_beta": best_error, "error_at_zero": error_at_zero},
    )
    return result
