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
"""`O_{P,E}`, the product of `O_P` with the `P`-layer."""
import logging

from pclose.components.pcomp import comp_p
from pclose.perm.group import PermGroup
from pclose.properties.closure import o_p
from pclose.properties.property import LAYER_AXIOMS, Property

LOGGER = logging.getLogger(__name__)


def o_pe(group: PermGroup, prop: Property) -> PermGroup:
    """
    Return `O_{P,E}(group) = O_P(group) L_P(group)`.

    :raise PreconditionError: unless the property declares closure under subgroups, quotients and extensions
        and contains every solvable group.
    """
    prop.require(LAYER_AXIOMS, "o_pe")
    return o_p(group, prop).join(comp_p(group, prop).layer)
