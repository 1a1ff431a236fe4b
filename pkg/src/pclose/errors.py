#
#  Copyright 2024 by C Change Labs Inc. www.c-change-labs.com
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
from typing import Any, Mapping


class PcloseError(Exception):
    """Base class of all errors raised by pclose."""


class ConstructionError(PcloseError, ValueError):
    """Malformed input: a non-bijective permutation, a broken spec file, an invalid action."""


class DegreeMismatchError(ConstructionError):
    """Permutations or groups of different degrees were combined."""


class NotContainedError(PcloseError, ValueError):
    """A subgroup argument is not contained in the ambient group."""


class NotNormalError(PcloseError, ValueError):
    """A subgroup argument is required to be normal but is not."""


class NotInvariantError(PcloseError, ValueError):
    """A subgroup argument is not invariant under the acting group."""


class PreconditionError(PcloseError, ValueError):
    """The hypotheses of an operation are not met (undeclared axioms, wrong rank, non-coprime action)."""


class ResourceLimitError(PcloseError):
    """The oracle bound or the quotient degree cap would be exceeded."""


class TheoremViolationError(PcloseError):
    """
    A verified claim failed.

    The claim is the short name of the asserted statement, the witness maps names to printable values
    (usually subgroups rendered as generator lists) so that the failure can be reproduced.
    """

    def __init__(self, claim: str, witness: Mapping[str, Any] | None = None, message: str | None = None) -> None:
        self.claim = claim
        self.witness: dict[str, Any] = dict(witness or {})
        super().__init__(message or f"Claim violated: {claim}")


class InternalConsistencyError(PcloseError):
    """An algorithm failed its own post-condition check. Indicates a bug, never swallowed."""
