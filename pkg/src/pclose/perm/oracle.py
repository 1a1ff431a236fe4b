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
Brute-force oracles over an explicit element table.

Only for groups of order at most the configured oracle bound. Elements are indexed in sorted image order
(the identity first) and subgroups are Python integers used as bitmasks over element indices.
"""
import functools
import logging
from typing import Iterable, Sequence

import numpy as np
from sympy.combinatorics import Permutation

from pclose.errors import NotContainedError, ResourceLimitError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import perm_key
from pclose.settings import get_settings
from pclose.utils import iter_bits

LOGGER = logging.getLogger(__name__)

IDENTITY_MASK = 1


def mask_order(mask: int) -> int:
    return mask.bit_count()


def is_submask(sub: int, mask: int) -> bool:
    return sub & ~mask == 0


class ElementTable:
    """All elements of a small group with lazily computed multiplication rows."""

    def __init__(self, group: PermGroup, *, bound: int | None = None) -> None:
        limit = bound if bound is not None else get_settings().oracle_bound
        if group.order > limit:
            raise ResourceLimitError(f"Group of order {group.order} exceeds the oracle bound {limit}")
        self.group = group
        self.elements: list[Permutation] = sorted(group.elements(), key=perm_key)
        self._array = np.array([p.array_form for p in self.elements], dtype=np.int32)
        self._index: dict[bytes, int] = {row.tobytes(): i for i, row in enumerate(self._array)}
        self._rows: dict[int, np.ndarray] = {}
        self._generators: dict[int, tuple[int, ...]] = {IDENTITY_MASK: ()}
        self._normal_cache: dict[int, list[int]] = {}
        self._cyclic: list[tuple[int, int]] | None = None
        self._subgroups: list[int] | None = None
        self.full_mask = self.closure(self.index_of(g) for g in group.generators)
        LOGGER.debug("Element table of order %d built", len(self.elements))

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, g: Permutation) -> int:
        key = np.array(g.array_form, dtype=np.int32).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise NotContainedError("Element is not in the tabulated group") from None

    def _lookup_rows(self, arrays: np.ndarray) -> np.ndarray:
        return np.fromiter((self._index[row.tobytes()] for row in arrays), dtype=np.int64, count=len(arrays))

    def right_row(self, j: int) -> np.ndarray:
        """Indices of `x * e_j` for every element `x`."""
        row = self._rows.get(j)
        if row is None:
            row = self._lookup_rows(self._array[j][self._array])
            self._rows[j] = row
        return row

    def conjugation_map(self, w: Permutation) -> np.ndarray:
        """Indices of `x^w` for every element `x`; `w` must normalize the tabulated group."""
        w_array = np.array(w.array_form, dtype=np.int32)
        w_inverse = np.argsort(w_array).astype(np.int32)
        try:
            return self._lookup_rows(w_array[self._array[:, w_inverse]])
        except KeyError:
            raise NotContainedError("Conjugating element does not normalize the tabulated group") from None

    def closure(self, generators: Iterable[int]) -> int:
        """Mask of the subgroup generated by the given element indices."""
        gens = tuple(dict.fromkeys(g for g in generators if g != 0))
        rows = [self.right_row(g) for g in gens]
        mask = IDENTITY_MASK
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for row in rows:
                    y = int(row[x])
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        self._generators.setdefault(mask, gens)
        return mask

    def generators_of(self, mask: int) -> tuple[int, ...]:
        """A generating set of the subgroup `mask`, computed greedily when not yet known."""
        known = self._generators.get(mask)
        if known is not None:
            return known
        gens: list[int] = []
        current = IDENTITY_MASK
        for x in iter_bits(mask):
            if not current >> x & 1:
                gens.append(x)
                current = self.closure(gens)
        self._generators[mask] = tuple(gens)
        return tuple(gens)

    def mask_of(self, sub: PermGroup) -> int:
        return self.closure(self.index_of(g) for g in sub.generators)

    def members(self, mask: int) -> list[int]:
        return list(iter_bits(mask))

    def subgroup(self, mask: int) -> PermGroup:
        return PermGroup(self.group.degree, [self.elements[i] for i in self.generators_of(mask)])

    def join(self, *masks: int) -> int:
        return self.closure(g for m in masks for g in self.generators_of(m))

    def cyclic_subgroups(self) -> list[tuple[int, int]]:
        """Pairs (mask, generating element index) of all cyclic subgroups."""
        if self._cyclic is None:
            found: dict[int, int] = {}
            for x in range(self.size):
                found.setdefault(self.closure((x,)), x)
            self._cyclic = sorted(found.items(), key=lambda item: (mask_order(item[0]), item[0]))
        return self._cyclic

    def all_subgroups(self) -> list[int]:
        """All subgroups, by closing the cyclic subgroups under joins."""
        if self._subgroups is None:
            cyclic = self.cyclic_subgroups()
            found = {mask: None for mask, _ in cyclic}
            queue = list(found)
            for current in queue:
                base_gens = self.generators_of(current)
                for mask, x in cyclic:
                    if current >> x & 1:
                        continue
                    joined = self.closure(base_gens + (x,))
                    if joined not in found:
                        found[joined] = None
                        queue.append(joined)
            self._subgroups = sorted(found, key=lambda m: (mask_order(m), m))
            LOGGER.debug("Enumerated %d subgroups of a group of order %d", len(self._subgroups), self.size)
        return self._subgroups

    def _classes_under(self, within: int, maps: Sequence[np.ndarray]) -> list[list[int]]:
        seen = 0
        classes = []
        for x in iter_bits(within):
            if seen >> x & 1:
                continue
            orbit = [x]
            seen |= 1 << x
            for y in orbit:
                for conj in maps:
                    z = int(conj[y])
                    if not seen >> z & 1:
                        seen |= 1 << z
                        orbit.append(z)
            classes.append(orbit)
        return classes

    def normal_subgroups(self, within: int | None = None) -> list[int]:
        """
        Normal subgroups of the subgroup `within` (the whole group by default).

        Normal closures of class representatives, closed under joins.
        """
        ambient = self.full_mask if within is None else within
        cached = self._normal_cache.get(ambient)
        if cached is not None:
            return cached
        maps = [self.conjugation_map(self.elements[g]) for g in self.generators_of(ambient)]
        closures: dict[int, tuple[int, ...]] = {}
        for cls in self._classes_under(ambient, maps):
            mask = self.closure(cls)
            closures.setdefault(mask, self.generators_of(mask))
        found = dict.fromkeys(closures)
        queue = list(found)
        for current in queue:
            for mask, gens in closures.items():
                if is_submask(mask, current):
                    continue
                joined = self.closure(self.generators_of(current) + gens)
                if joined not in found:
                    found[joined] = None
                    queue.append(joined)
        result = sorted(found, key=lambda m: (mask_order(m), m))
        self._normal_cache[ambient] = result
        return result

    def subnormal_subgroups(self, within: int | None = None) -> list[int]:
        """Subnormal subgroups, by descending through normal-subgroup lattices."""
        ambient = self.full_mask if within is None else within
        found = {ambient: None}
        queue = [ambient]
        for current in queue:
            for mask in self.normal_subgroups(current):
                if mask not in found:
                    found[mask] = None
                    queue.append(mask)
        return sorted(found, key=lambda m: (mask_order(m), m))

    def is_invariant(self, mask: int, maps: Sequence[np.ndarray]) -> bool:
        """Return `True` when every map sends the subgroup `mask` into itself."""
        members = self.members(mask)
        return all(mask >> int(conj[x]) & 1 for conj in maps for x in members)

    def center_of(self, mask: int) -> int:
        gens = self.generators_of(mask)
        result = 0
        for x in iter_bits(mask):
            row = self.right_row(x)
            if all(int(self.right_row(g)[x]) == int(row[g]) for g in gens):
                result |= 1 << x
        return result


@functools.lru_cache(maxsize=64)
def _cached_table(group: PermGroup, bound: int) -> ElementTable:
    return ElementTable(group, bound=bound)


def element_table(group: PermGroup) -> ElementTable:
    """Shared element table of `group`; groups are compared semantically, so equal groups share a table."""
    return _cached_table(group, get_settings().oracle_bound)


def within_oracle_bound(group: PermGroup) -> bool:
    return group.order <= get_settings().oracle_bound
