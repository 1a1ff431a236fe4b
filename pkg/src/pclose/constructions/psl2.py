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
"""`PSL(2, 2^k)` on the projective line, with the Frobenius permutation."""
import logging

from pclose.constructions.field import MAX_EXTENSION_DEGREE, binary_field
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup, build_group
from pclose.perm.permutation import Permutation, make_permutation

LOGGER = logging.getLogger(__name__)


def psl2_order_2k(k: int) -> int:
    q = 2**k
    return q * (q * q - 1)


def build_psl2(k: int) -> tuple[PermGroup, Permutation]:
    """
    Build `PSL(2, 2^k)` acting on the `2^k + 1` points of the projective line.

    Field elements are points `0..q-1` and the point at infinity is `q`. The generators are `x ↦ x + 1`,
    `x ↦ ωx` for a primitive `ω` and `x ↦ 1/x`; the second returned value is the Frobenius `x ↦ x²`.

    :raise ConstructionError: if `k` is outside `1..8`.
    """
    if not 1 <= k <= MAX_EXTENSION_DEGREE:
        raise ConstructionError(f"PSL(2,2^k) is built for 1 <= k <= {MAX_EXTENSION_DEGREE}, got {k}")
    field = binary_field(k)
    q = field.order
    xs = field.elements
    translation = field.to_ints(xs + field.gf(1)) + [q]
    scaling = field.to_ints(xs * field.gf(field.primitive_element)) + [q]
    inversion = [q] + field.to_ints(xs[1:] ** -1) + [0]
    frobenius = field.to_ints(xs**2) + [q]
    gens = [make_permutation(images, one_based=False) for images in (translation, scaling, inversion)]
    group = build_group(q + 1, gens)
    LOGGER.debug("Built PSL(2,%d) of order %d", q, group.order)
    return group, make_permutation(frobenius, one_based=False)
