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
"""
The corpus: named groups and actions in three tiers.

Every instance is rebuilt from its builder, so a tier is deterministic and worker processes can regenerate it
instead of receiving pickled groups.
"""
from dataclasses import dataclass
from functools import lru_cache
import logging
from typing import Callable, Final

from pclose import const
from pclose.closures.action import CoprimeAction, GroupAction
from pclose.closures.text_format import format_action_spec
from pclose.constructions.affine import build_affine_action, build_inversion_action
from pclose.constructions.named import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    extraspecial_27,
    frobenius_21,
    klein_four,
    quaternion,
    special_linear_2,
    symmetric,
)
from pclose.constructions.power import PowerStructure, build_power_action
from pclose.constructions.psl2 import build_psl2
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles
from pclose.perm.text_format import format_group_spec

LOGGER = logging.getLogger(__name__)

Pattern = const.PowerPattern

C3_INVERSION: Final[str] = "(2 3)"
F21_INVERSION: Final[str] = "(2 7)(3 6)(4 5)"


@dataclass(frozen=True)
class CorpusInstance:
    """A corpus member: a group, optionally with a group of actors acting on it."""

    instance_id: str
    tier: const.CorpusTier
    group: PermGroup
    action: GroupAction | None = None

    @property
    def coprime_action(self) -> CoprimeAction | None:
        return self.action if isinstance(self.action, CoprimeAction) else None

    def to_spec(self) -> str:
        """The instance in the action-spec format, or the group-spec format for a bare group."""
        if self.action is not None:
            return format_action_spec(self.action)
        return format_group_spec(self.group)

    def __repr__(self) -> str:
        return f"CorpusInstance({self.instance_id!r}, order={self.group.order})"


Builder = Callable[[], PermGroup | GroupAction]


def _inverted_power(factor: PermGroup, cycles: str, pattern: Pattern, copies: int) -> CoprimeAction:
    automorphism = parse_cycles(cycles, factor.degree)
    return build_power_action(factor, pattern, prime=2, automorphism=automorphism, copies=copies)


def _frobenius_power(k: int, pattern: Pattern, prime: int, copies: int | None) -> CoprimeAction:
    group, frobenius = build_psl2(k)
    return build_power_action(group, pattern, prime=prime, automorphism=frobenius, copies=copies)


def _frobenius_action(k: int) -> CoprimeAction:
    group, frobenius = build_psl2(k)
    return CoprimeAction.from_parts(group, PermGroup(group.degree, [frobenius]), k)


def _trivial_actors(group: PermGroup) -> CoprimeAction:
    return CoprimeAction.from_parts(group, PermGroup.trivial(group.degree), 2)


def swap_action() -> GroupAction:
    """`C2` swapping the two factors of `A5 × A5`; not coprime."""
    a5 = alternating(5)
    structure = PowerStructure(a5, 2)
    swap = parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", 10)
    return GroupAction.from_parts(structure.power(), PermGroup(10, [swap]), 2, structure=structure)


def _c3(pattern: Pattern, copies: int) -> CoprimeAction:
    return _inverted_power(cyclic(3), C3_INVERSION, pattern, copies)


def _f21(pattern: Pattern, copies: int) -> CoprimeAction:
    return _inverted_power(frobenius_21(), F21_INVERSION, pattern, copies)


# Order matters: D8 is the first group on which `abelian` fails to be closed under normal products.
_SMALL: Final[list[tuple[str, Builder]]] = [
    ("C2", lambda: cyclic(2)),
    ("C3", lambda: cyclic(3)),
    ("C4", lambda: cyclic(4)),
    ("C5", lambda: cyclic(5)),
    ("C6", lambda: cyclic(6)),
    ("V4", klein_four),
    ("S3", lambda: symmetric(3)),
    ("D8", lambda: dihedral(4)),
    ("Q8", quaternion),
    ("D10", lambda: dihedral(5)),
    ("D12", lambda: dihedral(6)),
    ("A4", lambda: alternating(4)),
    ("SL(2,3)", lambda: special_linear_2(3)),
    ("3^(1+2)", extraspecial_27),
    ("F21", frobenius_21),
    ("S4", lambda: symmetric(4)),
    ("A5", lambda: alternating(5)),
    ("S3xS3", lambda: direct_product(symmetric(3), symmetric(3))),
    ("A5xC2", lambda: direct_product(alternating(5), cyclic(2))),
    ("SL(2,5)", lambda: special_linear_2(5)),
    ("S5", lambda: symmetric(5)),
    ("A6", lambda: alternating(6)),
    ("S6", lambda: symmetric(6)),
    ("A7", lambda: alternating(7)),
    ("S7", lambda: symmetric(7)),
    ("A5xA5", lambda: direct_product(alternating(5), alternating(5))),
    ("inversion-C15", lambda: build_inversion_action(15)),
    ("inversion-C3^2", lambda: _c3(Pattern.Diagonal, 2)),
    ("coordinatewise-C3^3", lambda: _c3(Pattern.Coordinatewise, 3)),
    ("wreath-C3^2", lambda: build_power_action(cyclic(3), Pattern.RegularWreath, prime=2)),
    ("wreath-C3^5", lambda: build_power_action(cyclic(3), Pattern.RegularWreath, prime=5)),
    ("inversion-F21", lambda: _f21(Pattern.Diagonal, 1)),
    ("coordinatewise-F21^2", lambda: _f21(Pattern.Coordinatewise, 2)),
    ("affine-C2^3", lambda: build_affine_action(3)),
    ("affine-A5xC2^3", lambda: build_affine_action(3, alternating(5))),
    ("trivial-S4", lambda: _trivial_actors(symmetric(4))),
    ("trivial-A5", lambda: _trivial_actors(alternating(5))),
    ("swap-A5^2", swap_action),
]

_STRUCTURED: Final[list[tuple[str, Builder]]] = [
    ("L2(4)", lambda: build_psl2(2)[0]),
    ("L2(8)", lambda: build_psl2(3)[0]),
    ("L2(16)", lambda: build_psl2(4)[0]),
    ("L2(32)", lambda: build_psl2(5)[0]),
    ("frobenius-L2(32)", lambda: _frobenius_action(5)),
    ("diagonal-L2(32)^2", lambda: _frobenius_power(5, Pattern.Diagonal, 5, 2)),
    ("wreath-A5^7", lambda: build_power_action(alternating(5), Pattern.RegularWreath, prime=7)),
    ("wreath-L2(8)^5", lambda: build_power_action(build_psl2(3)[0], Pattern.RegularWreath, prime=5)),
    ("coordinatewise-F21^3", lambda: _f21(Pattern.Coordinatewise, 3)),
]

_LARGE: Final[list[tuple[str, Builder]]] = [
    ("coordinatewise-L2(32)^3", lambda: _frobenius_power(5, Pattern.Coordinatewise, 5, 3)),
    ("mixed-L2(32)^5", lambda: _frobenius_power(5, Pattern.Mixed, 5, None)),
]

_TIERS: Final[dict[const.CorpusTier, list[tuple[str, Builder]]]] = {
    const.CorpusTier.Small: _SMALL,
    const.CorpusTier.Structured: _STRUCTURED,
    const.CorpusTier.Large: _LARGE,
}


def instance_ids(tier: const.CorpusTier | str) -> list[str]:
    """Instance identifiers of a tier in corpus order, without building anything."""
    return [name for name, _ in _TIERS[const.CorpusTier(tier)]]


@lru_cache(maxsize=None)
def generate_corpus(tier: const.CorpusTier | str) -> tuple[CorpusInstance, ...]:
    """
    Build every instance of a tier, in corpus order.

    :raise ValueError: if the tier is unknown.
    """
    tier = const.CorpusTier(tier)
    result = []
    for name, builder in _TIERS[tier]:
        built = builder()
        if isinstance(built, GroupAction):
            result.append(CorpusInstance(name, tier, built.group, built))
        else:
            result.append(CorpusInstance(name, tier, built))
    LOGGER.info("Generated %d instances of the %s tier", len(result), tier)
    return tuple(result)


def get_instance(tier: const.CorpusTier | str, instance_id: str) -> CorpusInstance:
    """
    Return one instance of a tier.

    :raise ConstructionError: if the tier has no such instance.
    """
    for instance in generate_corpus(tier):
        if instance.instance_id == instance_id:
            return instance
    raise ConstructionError(f"No instance {instance_id!r} in the {tier} tier")


def corpus_groups(tier: const.CorpusTier | str) -> list[PermGroup]:
    """The acted-on groups of a tier, in corpus order."""
    return [instance.group for instance in generate_corpus(tier)]
