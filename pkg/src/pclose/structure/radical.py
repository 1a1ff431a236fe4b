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
"""Radicals: largest normal p-subgroups, the Fitting subgroup, the solvable radical and π-radicals."""
import logging
from typing import Callable, Collection

from pclose.perm.group import PermGroup
from pclose.perm.quotient import quotient
from pclose.perm.subgroups import core, normal_closure, normalizes
from pclose.utils import prime_divisors

LOGGER = logging.getLogger(__name__)


def o_prime(group: PermGroup, p: int) -> PermGroup:
    """Return `O_p(group)`, the core of a Sylow `p`-subgroup."""
    if group.order % p != 0:
        return PermGroup.trivial(group.degree)
    sylow = group.sylow_subgroup(p)
    if normalizes(group, sylow):
        return sylow
    return core(group, sylow)


def fitting(group: PermGroup) -> PermGroup:
    """Return `F(group)`, the product of the `O_p` over primes dividing the order."""
    result = PermGroup.trivial(group.degree)
    for p in prime_divisors(group.order):
        result = result.join(o_prime(group, p))
    return result


def _iterated_radical(group: PermGroup, layer: Callable[[PermGroup], PermGroup]) -> PermGroup:
    radical = PermGroup.trivial(group.degree)
    while True:
        target, hom = quotient(group, radical)
        step = layer(target)
        if step.is_trivial:
            return radical
        radical = hom.preimage(step)
        LOGGER.debug("Radical grew to order %d", radical.order)


def solvable_radical(group: PermGroup) -> PermGroup:
    """Return `Sol(group)` by iterating `S ← preimage of F(G/S)` until the Fitting subgroup is trivial."""
    if group.is_solvable:
        return group
    return _iterated_radical(group, fitting)


def solvable_pi_radical(group: PermGroup, primes: Collection[int]) -> PermGroup:
    """
    Return the largest normal subgroup built from iterated normal `p`-subgroups with `p` in `primes`.

    This is the largest normal π-subgroup whenever every π-group is solvable.
    """
    pi = set(primes)

    def layer(target: PermGroup) -> PermGroup:
        result = PermGroup.trivial(target.degree)
        for p in prime_divisors(target.order):
            if p in pi:
                result = result.join(o_prime(target, p))
        return result

    if set(prime_divisors(group.order)) <= pi and group.is_solvable:
        return group
    return _iterated_radical(group, layer)


def pi_residual(group: PermGroup, primes: Collection[int]) -> PermGroup:
    """Return `O^π(group)`, generated by the Sylow `q`-subgroups for `q` outside `primes`."""
    pi = set(primes)
    result = PermGroup.trivial(group.degree)
    for q in prime_divisors(group.order):
        if q not in pi:
            result = result.join(normal_closure(group, group.sylow_subgroup(q)))
    return result
