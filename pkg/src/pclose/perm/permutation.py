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
Permutations of {0..n-1} backed by `sympy.combinatorics.Permutation`.

Points are stored 0-based; every textual rendering is 1-based disjoint-cycle notation, e.g. `(1 2 3)(4 5)`.
Products follow the right-action convention: `p * q` applies `p` first, `x ^ g` is `g⁻¹ x g`.
"""
import re
from typing import Final, Sequence

from sympy.combinatorics import Permutation

from pclose.errors import ConstructionError, DegreeMismatchError

__all__ = [
    "Permutation",
    "make_permutation",
    "identity",
    "parse_cycles",
    "format_cycles",
    "commutator",
    "conjugate",
    "perm_key",
    "shift",
]

_CYCLE_PATTERN: Final[re.Pattern] = re.compile(r"\(([^()]*)\)")
_SEPARATORS: Final[re.Pattern] = re.compile(r"[\s,]+")


def make_permutation(images: Sequence[int], *, one_based: bool = True) -> Permutation:
    """
    Build a permutation from its image list.

    :raise ConstructionError: if the images are not a bijection of the point set.
    """
    if len(images) == 0:
        raise ConstructionError("A permutation needs a positive degree.")
    offset = 1 if one_based else 0
    array = [int(x) - offset for x in images]
    if sorted(array) != list(range(len(array))):
        raise ConstructionError(f"Images {list(images)} do not form a bijection of {len(array)} points.")
    return Permutation(array)


def identity(degree: int) -> Permutation:
    """Return the identity permutation of the given degree."""
    if degree < 1:
        raise ConstructionError("A permutation needs a positive degree.")
    return Permutation(degree - 1)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation. Whitespace and commas inside cycles are ignored."""
    stripped = text.strip()
    if _CYCLE_PATTERN.sub("", stripped).strip():
        raise ConstructionError(f"Unexpected characters in cycle notation: {text!r}")
    array = list(range(degree))
    seen: set[int] = set()
    for match in _CYCLE_PATTERN.finditer(stripped):
        body = match.group(1).strip()
        if not body:
            continue
        try:
            points = [int(x) - 1 for x in _SEPARATORS.split(body)]
        except ValueError as e:
            raise ConstructionError(f"Non-numeric point in cycle ({body})") from e
        for p in points:
            if p < 0 or p >= degree:
                raise ConstructionError(f"Point {p + 1} outside 1..{degree}")
            if p in seen:
                raise ConstructionError(f"Point {p + 1} repeated in {text!r}")
            seen.add(p)
        for i, p in enumerate(points):
            array[p] = points[(i + 1) % len(points)]
    return Permutation(array)


def format_cycles(p: Permutation) -> str:
    """Render a permutation in 1-based disjoint-cycle notation; the identity is `()`."""
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """Return `[x, y] = x⁻¹ y⁻¹ x y`."""
    if x.size != y.size:
        raise DegreeMismatchError(f"Degrees differ: {x.size} and {y.size}")
    return ~x * ~y * x * y


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """Return `x^g = g⁻¹ x g`."""
    if x.size != g.size:
        raise DegreeMismatchError(f"Degrees differ: {x.size} and {g.size}")
    return ~g * x * g


def perm_key(p: Permutation) -> tuple[int, ...]:
    """Hashable canonical key of a permutation, also used for deterministic ordering."""
    return tuple(p.array_form)


def shift(p: Permutation, offset: int, degree: int) -> Permutation:
    """Move `p` onto the points `offset..offset + p.size - 1` of a permutation of the given degree."""
    if offset + p.size > degree:
        raise DegreeMismatchError(f"Cannot place a permutation of degree {p.size} at {offset} in degree {degree}")
    array = list(range(degree))
    for i, x in enumerate(p.array_form):
        array[offset + i] = offset + x
    return Permutation(array)
