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
"""The multiplicative group of `GF(2^k)` acting on its additive group, optionally beside a passive factor."""
import logging

from pclose.closures.action import CoprimeAction
from pclose.constructions.field import binary_field
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import make_permutation, shift
from pclose.utils import is_prime

LOGGER = logging.getLogger(__name__)


def build_affine_action(k: int, passive: PermGroup | None = None) -> CoprimeAction:
    """
    Build `C_2^k` (translations of `GF(2^k)`) acted on by the multiplications by `GF(2^k)^×`.

    `2^k - 1` must be prime so the actors have prime exponent. A `passive` group is added as a direct factor
    on which the actors act trivially, placed on the first points.

    :raise ConstructionError: if `2^k - 1` is not prime.
    """
    prime = 2**k - 1
    if not is_prime(prime):
        raise ConstructionError(f"2^{k} - 1 = {prime} is not prime")
    field = binary_field(k)
    xs = field.elements
    translations = [
        make_permutation(field.to_ints(xs + field.gf(1 << j)), one_based=False) for j in range(k)
    ]
    multiplication = make_permutation(field.to_ints(xs * field.gf(field.primitive_element)), one_based=False)
    offset = 0 if passive is None else passive.degree
    degree = offset + field.order
    gens = [shift(t, offset, degree) for t in translations]
    if passive is not None:
        gens.extend(shift(g, 0, degree) for g in passive.generators)
    group = PermGroup(degree, gens)
    actors = PermGroup(degree, [shift(multiplication, offset, degree)])
    LOGGER.debug("Built affine action of C%d on a group of order %d", prime, group.order)
    return CoprimeAction.from_parts(group, actors, prime)


def build_inversion_action(n: int) -> CoprimeAction:
    """
    Build `C_n` on the integers modulo `n` with `C_2` acting by inversion `x ↦ -x`.

    :raise ConstructionError: if `n` is even.
    """
    if n % 2 == 0 or n < 3:
        raise ConstructionError(f"Inversion acts coprimely only on cyclic groups of odd order, got {n}")
    rotation = make_permutation([(x + 1) % n for x in range(n)], one_based=False)
    inversion = make_permutation([(-x) % n for x in range(n)], one_based=False)
    return CoprimeAction.from_parts(PermGroup(n, [rotation]), PermGroup(n, [inversion]), 2)
