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

import functools
from typing import Optional

from qam_receiver.logging.events import ReceiverEvent


class ReceiverException(Exception):
    """
    Base Exception class for all exceptions thrown from the qam_receiver library.
    """

    def __init__(
        self,
        message: Optional[str] = None,
        inner_exception: Optional[Exception] = None,
        event: Optional[ReceiverEvent] = None,
        **kwargs,
    ):
        super().__init__(message)
        self._inner_exception = inner_exception
        self._event = event

    def event(self) -> Optional[ReceiverEvent]:
        return self._event

    def inner_exception(self) -> Optional[Exception]:
        return self._inner_exception

    @classmethod
    def recast(cls, *exceptions, **params):
        """
        Decorator to recast an exception as the specified exception:
        Example:
            ```python
            @ReceiverException.recast(Exception)
            @InvalidParameterException.recast(ValueError)
            def raise_my_exception2():
                raise ValueError()
            ```

        Exercise caution when using multiple re-casts.  Recasting as something
        that is then caught by a decorator further up the stack causes problems.
        """
        if not exceptions:
            exceptions = (Exception,)

        def decorator(func):
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except exceptions as e:
                    raise cls(message="{} ({})".format(str(e), e.__class__.__name__), inner_exception=e) from e

            return wrapper

        return decorator


class InvalidParameterException(ReceiverException):
    """
    A caller supplied value outside the documented domain of an operation:
    negative photon numbers or rates, out of range row indices, empty search
    brackets, non-positive tolerances, and similar.
    """

    def __init__(self, event: ReceiverEvent = ReceiverEvent.TRACE, **kwargs):
        super().__init__(event=event, **kwargs)


class InvariantViolationException(ReceiverException):
    """
    A typed value failed one of its construction time invariants.
    """

    def __init__(self, event: ReceiverEvent = ReceiverEvent.INVARIANT_VIOLATION, **kwargs):
        super().__init__(event=event, **kwargs)


class GramFactorizationException(ReceiverException):
    """
    The Gram matrix handed to the state embedding is not positive semidefinite
    beyond round-off.  This always indicates an upstream bug in the overlap
    computation.
    """

    def __init__(self, min_eigenvalue: Optional[float] = None, **kwargs):
        super().__init__(**kwargs)
        self._min_eigenvalue = min_eigenvalue

    def min_eigenvalue(self) -> Optional[float]:
        return self._min_eigenvalue


class ConvergenceException(ReceiverException):
    """
    An iterative solver hit its iteration cap before its acceptance gate was met.
    The last residual and the number of iterations performed are kept for
    diagnostics.
    """

    def __init__(
        self,
        last_residual: Optional[float] = None,
        iterations: Optional[int] = None,
        event: ReceiverEvent = ReceiverEvent.HELSTROM_SOLVE_FAILED,
        **kwargs,
    ):
        super().__init__(event=event, **kwargs)
        self._last_residual = last_residual
        self._iterations = iterations

    def last_residual(self) -> Optional[float]:
        return self._last_residual

    def iterations(self) -> Optional[int]:
        return self._iterations

    def __str__(self):
        return "{} (last residual: {}, iterations: {})".format(
            super().__str__(), self._last_residual, self._iterations
        )
