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
"""Identification of nonabelian simple groups by order."""
import logging
from typing import Final

from pclose import const
from pclose.perm.group import PermGroup
from pclose.settings import get_settings
from pclose.utils import factor_multiset, is_prime

LOGGER = logging.getLogger(__name__)

ORDER_LIMIT: Final[int] = 10**6

# Simple groups of order below ORDER_LIMIT that are not of the form L2(q).
_SPORADIC_ORDERS: Final[dict[int, str]] = {
    2520: "A7",
    5616: "L3(3)",
    6048: "U3(3)",
    7920: "M11",
    20160: "A8",
    25920: "U4(2)",
    29120: "Sz(8)",
    62400: "U3(4)",
    95040: "M12",
    126000: "U3(5)",
    175560: "J1",
    181440: "A9",
    372000: "L3(5)",
    443520: "M22",
    604800: "J2",
    979200: "S4(4)",
}
_L2_RENAMES: Final[dict[int, str]] = {4: "A5", 5: "A5", 9: "A6"}
AMBIGUOUS_ORDER: Final[int] = 20160


def psl2_order(q: int) -> int:
    """Order of PSL(2, q)."""
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)


def _is_prime_power(q: int) -> bool:
    return len(factor_multiset(q)) == 1


def _build_table() -> dict[int, str]:
    table: dict[int, str] = {}
    for q in range(4, 200):
        if _is_prime_power(q) and psl2_order(q) < ORDER_LIMIT:
            table.setdefault(psl2_order(q), _L2_RENAMES.get(q, f"L2({q})"))
    for order, label in _SPORADIC_ORDERS.items():
        table.setdefault(order, label)
    return table


SIMPLE_ORDERS: Final[dict[int, str]] = _build_table()


def label_for_order(order: int) -> str | None:
    """Label of the simple group of the given order, `None` when the order is not tabulated."""
    if is_prime(order):
        return f"C{order}"
    return SIMPLE_ORDERS.get(order)


def is_simple_order(order: int) -> bool:
    return label_for_order(order) is not None


def has_element_of_order(group: PermGroup, n: int, attempts: int) -> bool:
    """Search seeded random elements for one of order `n`."""
    for g in group.generators:
        if g.order() == n:
            return True
    for _ in range(attempts):
        if group.random_element().order() == n:
            return True
    return False


# L3(4) has no faithful action on fewer points; A8 acts on 8 and 15.
_L34_MIN_DEGREE: Final[int] = 21


def _is_a8(group: PermGroup) -> bool:
    """
    Decide between A8 and L3(4) for a simple group of order 20160.

    A nontrivial orbit shorter than the minimal degree of L3(4) settles it, as does an element of order 15,
    which A8 has and L3(4) lacks. The random search for one is confirmed by enumerating the elements.
    """
    if any(1 < len(orbit) < _L34_MIN_DEGREE for orbit in group.orbits()):
        return True
    if has_element_of_order(group, 15, const.ORDER_15_SEARCH_BOUND):
        return True
    if group.order > get_settings().exhaustive_order_limit:
        LOGGER.warning("No element of order 15 found by sampling a group of order %d", group.order)
        return False
    return any(g.order() == 15 for g in group.elements())


def identify_simple(group: PermGroup) -> str | None:
    """
    Label a simple group, assumed simple by the caller.

    The two simple groups of order 20160 are told apart by `_is_a8`.
    """
    label = label_for_order(group.order)
    if label is None:
        LOGGER.warning("Simple group of order %d is not in the identification table", group.order)
        return None
    if group.order == AMBIGUOUS_ORDER:
        return "A8" if _is_a8(group) else "L3(4)"
    return label


def order_of_label(label: str) -> int | None:
    """Inverse of the labelling: the order of the group with the given label."""
    if label.startswith("C") and label[1:].isdigit():
        return int(label[1:])
    if label == "L3(4)":
        return AMBIGUOUS_ORDER
    for order, known in SIMPLE_ORDERS.items():
        if known == label:
            return order
    return None
