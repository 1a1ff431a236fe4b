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
"""Functors derived from a given one: the invariant closures `θ_P`, `θ_nP` and the subfunctor `ψ` of an actor."""
import logging

from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.fixed import commutator_in
from pclose.closures.invariant import o_np_invariant, o_p_invariant
from pclose.errors import NotContainedError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.perm.subgroups import centralizer, intersection, normalizes
from pclose.properties.property import Property
from pclose.signalizer.functor import SignalizerFunctor, require_kgroup_values, theta_of_actors
from pclose.structure.layer import join_all

LOGGER = logging.getLogger(__name__)


def derive_functor(functor: SignalizerFunctor, mode: const.FunctorMode | str, prop: Property) -> SignalizerFunctor:
    """
    Return `θ_P(a) = O_P(θ(a);A)` or `θ_nP(a) = O_nP(θ(a);A)`, verified to be a signalizer functor again.

    :raise PreconditionError: if the functor fails verification, a value is not a K-group or the property
        lacks the axioms of the closure.
    :raise TheoremViolationError: if the derived functor fails verification.
    :raise ResourceLimitError: if a closure exceeds the oracle bound.
    """
    mode = const.FunctorMode(mode)
    functor.require_verified("derive_functor")
    require_kgroup_values(functor, "derive_functor")
    closure = o_p_invariant if mode == const.FunctorMode.P else o_np_invariant
    values = {coords: closure(functor.action.restrict(value), prop) for coords, value in functor.items()}
    unchanged = [c for c in functor.centralizing if values[c].order == functor.value(c).order]
    derived = SignalizerFunctor(functor.action, values, centralizing=unchanged)
    if not derived.verified:
        violation = derived.report.violations[0]
        raise TheoremViolationError(
            f"theta_{mode}{prop.name} is a signalizer functor",
            {"violation": violation.describe(derived), "witness": violation.witness},
        )
    LOGGER.debug("Derived theta_%s for %s: %r", mode, prop.name, derived)
    return derived


def subfunctor_psi(functor: SignalizerFunctor, t: Permutation) -> SignalizerFunctor:
    """
    Return `ψ(a) = [θ(a), t](θ(a) ∩ D)` with `D = ⟨C_{[θ(a),t]}(t) : a ∈ A#⟩`.

    The result is checked to be a subfunctor of `θ` normalized by `θ(A)`.

    :raise NotContainedError: if `t` is not a nonidentity actor.
    :raise PreconditionError: if the functor fails verification.
    :raise TheoremViolationError: if `ψ` is not a `θ(A)`-invariant subfunctor.
    """
    if t.is_Identity:
        raise NotContainedError("t must be a nonidentity actor")
    functor.key(t)
    functor.require_verified("subfunctor_psi")
    degree = functor.action.group.degree
    commutators = {coords: commutator_in(value, t) for coords, value in functor.items()}
    d = join_all([centralizer(x, t) for x in commutators.values()], degree)
    values = {coords: commutators[coords].join(intersection(value, d)) for coords, value in functor.items()}
    psi = SignalizerFunctor(functor.action, values)
    _require_subfunctor(functor, psi)
    return psi


def _require_subfunctor(functor: SignalizerFunctor, psi: SignalizerFunctor) -> None:
    for coords, value in psi.items():
        if not value.is_subgroup_of(functor.value(coords)):
            raise TheoremViolationError("psi(a) ≤ theta(a)", {"a": psi.word(coords), "psi": value})
    if not psi.verified:
        violation = psi.report.violations[0]
        raise TheoremViolationError("psi is a signalizer functor", {"violation": violation.describe(psi)})
    fixed = theta_of_actors(functor)
    for coords, value in psi.items():
        if not normalizes(fixed, value):
            raise TheoremViolationError("theta(A) normalizes psi(a)", {"a": psi.word(coords), "psi": value})

