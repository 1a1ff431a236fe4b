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
import logging
import re

from pclose.perm.group import PermGroup
from pclose.perm.subgroups import derived_subgroup, lower_central_series, perfect_core
from pclose.properties.property import Axiom, Property
from pclose.structure.radical import fitting, pi_residual, solvable_pi_radical, solvable_radical
from pclose.utils import is_prime, prime_divisors

LOGGER = logging.getLogger(__name__)

_PI_RE = re.compile(r"^pi:(\d+(?:,\d+)*)$")

_ALL_AXIOMS = frozenset(Axiom)
_CLOSED_NOT_SOLVABLE = _ALL_AXIOMS - {Axiom.ContainsSolvable}
_NILPOTENT_AXIOMS = frozenset(
    {Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.IntersectionQuotient, Axiom.NormalProduct}
)


def _is_pi_number(n: int, primes: frozenset[int]) -> bool:
    return all(p in primes for p in prime_divisors(n))


def _odd_primes(group: PermGroup) -> list[int]:
    return [p for p in prime_divisors(group.order) if p != 2]


TRIVIAL = Property(
    name="trivial",
    predicate=lambda g: g.order == 1,
    declared_axioms=_CLOSED_NOT_SOLVABLE,
    proven_axioms=_CLOSED_NOT_SOLVABLE,
    all_solvable=True,
    fixed_point_solvable=True,
    order_test=lambda n: n == 1,
    radical=lambda g: PermGroup.trivial(g.degree),
    residual=lambda g: g,
)

NILPOTENT = Property(
    name="nilpotent",
    predicate=lambda g: g.is_nilpotent,
    declared_axioms=_NILPOTENT_AXIOMS,
    proven_axioms=_NILPOTENT_AXIOMS,
    all_solvable=True,
    fixed_point_solvable=True,
    radical=fitting,
    residual=lambda g: lower_central_series(g)[-1],
)

SOLVABLE = Property(
    name="solvable",
    predicate=lambda g: g.is_solvable,
    declared_axioms=_ALL_AXIOMS,
    proven_axioms=_ALL_AXIOMS,
    all_solvable=True,
    radical=solvable_radical,
    residual=perfect_core,
)

ODD_ORDER = Property(
    name="odd-order",
    predicate=lambda g: g.order % 2 == 1,
    declared_axioms=_CLOSED_NOT_SOLVABLE,
    proven_axioms=_CLOSED_NOT_SOLVABLE,
    all_solvable=True,
    fixed_point_solvable=True,
    order_test=lambda n: n % 2 == 1,
    radical=lambda g: solvable_pi_radical(g, _odd_primes(g)),
    residual=lambda g: pi_residual(g, _odd_primes(g)),
)

# Declares closure under normal products, which abelian groups do not have; verify_axioms refutes it.
ABELIAN = Property(
    name="abelian",
    predicate=lambda g: g.is_abelian,
    declared_axioms=_NILPOTENT_AXIOMS,
    proven_axioms=_NILPOTENT_AXIOMS - {Axiom.NormalProduct},
    all_solvable=True,
    residual=derived_subgroup,
)


def pi_property(primes: frozenset[int]) -> Property:
    """
    The property of being a π-group for the given prime set.

    Every π-group is solvable when π has at most two primes or omits 2; only then is the iterated radical
    the largest normal π-subgroup.
    """
    if not primes or not all(is_prime(p) for p in primes):
        raise ValueError(f"Not a set of primes: {sorted(primes)}")
    all_solvable = len(primes) <= 2 or 2 not in primes
    return Property(
        name="pi:" + ",".join(str(p) for p in sorted(primes)),
        predicate=lambda g: _is_pi_number(g.order, primes),
        declared_axioms=_CLOSED_NOT_SOLVABLE,
        proven_axioms=_CLOSED_NOT_SOLVABLE,
        all_solvable=all_solvable,
        order_test=lambda n: _is_pi_number(n, primes),
        radical=(lambda g: solvable_pi_radical(g, primes)) if all_solvable else None,
        residual=lambda g: pi_residual(g, primes),
    )


class PropertyRegistry:
    """Registry of the properties known by name. `pi:<primes>` names are built on demand."""

    def __init__(self) -> None:
        self.__properties: dict[str, Property] = {}

    def register(self, prop: Property) -> None:
        """
        Register a property.

        :raise ValueError: if a property with the same name is already registered.
        """
        if prop.name in self.__properties or _PI_RE.match(prop.name):
            raise ValueError(f"Property already registered: {prop.name}")
        self.__properties[prop.name] = prop

    def get_supported_names(self) -> list[str]:
        """Return the registered names. Prime-set properties are not listed."""
        return list(self.__properties.keys())

    def is_supported(self, name: str) -> bool:
        return name in self.__properties or _PI_RE.match(name) is not None

    def get(self, name: str) -> Property:
        """
        Return the property with the given name.

        :raise ValueError: if the name is unknown or is a malformed prime set.
        """
        name = name.strip().lower()
        if name in self.__properties:
            return self.__properties[name]
        match = _PI_RE.match(name)
        if match:
            return pi_property(frozenset(int(p) for p in match.group(1).split(",")))
        raise ValueError(f"Unknown property: {name}. Known: {', '.join(self.get_supported_names())}, pi:<primes>")


def default_registry() -> PropertyRegistry:
    """Return a registry holding the built-in properties."""
    registry = PropertyRegistry()
    for prop in (TRIVIAL, NILPOTENT, SOLVABLE, ODD_ORDER, ABELIAN):
        registry.register(prop)
    return registry


def get_property(name: str) -> Property:
    """Look a property up in the default registry."""
    return default_registry().get(name)
