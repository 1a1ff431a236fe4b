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
"""Subgroup constructions: centralizers, normalizers, normal closures, intersections, cores and series."""
import logging
from typing import Iterable, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from pclose import const
from pclose.errors import DegreeMismatchError, NotContainedError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import commutator, perm_key

LOGGER = logging.getLogger(__name__)


def _check_degree(group: PermGroup, degree: int) -> None:
    if group.degree != degree:
        raise DegreeMismatchError(f"Degrees differ: {group.degree} and {degree}")


def _scratch(group: PermGroup) -> PermutationGroup:
    """A fresh sympy group for searches that rewrite the stabilizer chain of the group they run on."""
    return PermutationGroup(list(group.generators))


def require_subgroup(sub: PermGroup, ambient: PermGroup, name: str = "subgroup") -> None:
    """
    Ensure `sub` is contained in `ambient`.

    :raise NotContainedError: otherwise.
    """
    _check_degree(sub, ambient.degree)
    if not sub.is_subgroup_of(ambient):
        raise NotContainedError(f"The {name} {sub!r} is not contained in {ambient!r}")


def centralizer(group: PermGroup, target: Permutation | PermGroup) -> PermGroup:
    """
    Return the elements of `group` commuting with `target` (with every generator of `target` for a group).

    Computed by sympy's backtrack search over the base-image tree with orbit pruning.
    """
    if isinstance(target, PermGroup):
        _check_degree(target, group.degree)
        if target.is_trivial or group.is_trivial:
            return group
        if all(t * g == g * t for t in target.generators for g in group.generators):
            return group
        sympy_target = target.sympy_group
    else:
        if target.size != group.degree:
            raise DegreeMismatchError(f"Degrees differ: {group.degree} and {target.size}")
        if target.is_Identity or group.is_trivial:
            return group
        if all(target * g == g * target for g in group.generators):
            return group
        sympy_target = target
    return PermGroup.from_sympy(_scratch(group).centralizer(sympy_target), group.degree)


def center(group: PermGroup) -> PermGroup:
    """Return `Z(group)`."""
    return centralizer(group, group)


def normalizes(x: PermGroup | Permutation, k: PermGroup) -> bool:
    """Return `True` when every element of `x` conjugates `k` into itself."""
    gens: Iterable[Permutation] = x.generators if isinstance(x, PermGroup) else (x,)
    return all(k.contains(~g * h * g) for g in gens for h in k.generators)


def is_normal(group: PermGroup, sub: PermGroup) -> bool:
    """Return `True` when `sub` is a normal subgroup of `group`."""
    return sub.degree == group.degree and sub.is_subgroup_of(group) and normalizes(group, sub)


def normalizer(group: PermGroup, sub: PermGroup) -> PermGroup:
    """
    Return `N_group(sub)`; `sub` need not lie in `group`.

    Stabilizer of `sub` in the conjugation action: the orbit of `sub` under the generators of `group` is
    enumerated with transversal elements, and the Schreier generators of the stabilizer generate the result.
    """
    _check_degree(sub, group.degree)
    if normalizes(group, sub):
        return group
    orbit = [sub]
    transversal = [group.identity]
    result = PermGroup.trivial(group.degree)
    index = 0
    while index < len(orbit):
        current, t = orbit[index], transversal[index]
        index += 1
        for g in group.generators:
            image = current.conjugate(g)
            j = next((k for k, other in enumerate(orbit) if other == image), None)
            if j is None:
                orbit.append(image)
                transversal.append(t * g)
                continue
            schreier = t * g * ~transversal[j]
            if not result.contains(schreier):
                result = result.join(schreier)
    LOGGER.debug("Normalizer of index %d in a group of order %d", len(orbit), group.order)
    return result


def normal_closure(group: PermGroup, sub: PermGroup | Iterable[Permutation]) -> PermGroup:
    """
    Return the smallest normal subgroup of `group` containing `sub`.

    Deterministic: conjugates of the current generators by the generators of `group` are added until
    the generated subgroup is closed under conjugation.

    :raise NotContainedError: if `sub` is not contained in `group`.
    """
    seeds = sub.generators if isinstance(sub, PermGroup) else tuple(sub)
    for s in seeds:
        if not group.contains(s):
            raise NotContainedError(f"Element of degree {s.size} is not contained in {group!r}")
    closure = PermGroup(group.degree, seeds)
    pending = list(closure.generators)
    while pending:
        h = pending.pop()
        for g in group.generators:
            conj = ~g * h * g
            if not closure.contains(conj):
                closure = closure.join(conj)
                pending.append(conj)
    return closure


def intersection(first: PermGroup, second: PermGroup) -> PermGroup:
    """Return `first ∩ second`."""
    _check_degree(second, first.degree)
    if first.is_subgroup_of(second):
        return first
    if second.is_subgroup_of(first):
        return second
    small, large = (first, second) if first.order <= second.order else (second, first)
    if small.order <= const.ELEMENT_FILTER_LIMIT:
        gens: list[Permutation] = []
        result = PermGroup.trivial(small.degree)
        for g in small.elements():
            if large.contains(g) and not result.contains(g):
                gens.append(g)
                result = PermGroup(small.degree, gens)
                if result.order == small.order:
                    break
        return result
    found = _scratch(small).subgroup_search(large.contains)
    return PermGroup.from_sympy(found, small.degree)


def intersect_all(groups: Sequence[PermGroup], degree: int) -> PermGroup:
    """Return the intersection of all given groups; the caller supplies the degree for an empty input."""
    if not groups:
        raise ValueError(f"Intersection of no groups of degree {degree} is undefined")
    result = groups[0]
    for g in groups[1:]:
        result = intersection(result, g)
    return result


def core(group: PermGroup, sub: PermGroup) -> PermGroup:
    """Return the largest normal subgroup of `group` contained in `sub`."""
    result = sub
    changed = True
    while changed:
        changed = False
        for g in group.generators:
            if normalizes(g, result):
                continue
            result = intersection(result, result.conjugate(g))
            changed = True
    return result


def is_subnormal(group: PermGroup, sub: PermGroup) -> bool:
    """
    Return `True` when `sub` is subnormal in `group`.

    Walks the chain `H_0 = group`, `H_{i+1} = ncl_{H_i}(sub)`, which stabilizes at `sub` exactly when
    `sub` is subnormal.
    """
    require_subgroup(sub, group)
    current = group
    while True:
        if current.order == sub.order:
            return True
        nxt = normal_closure(current, sub)
        if nxt.order == current.order:
            return False
        current = nxt


def commutator_subgroup(first: PermGroup, second: PermGroup) -> PermGroup:
    """Return `[first, second]`, the normal closure in `⟨first, second⟩` of the generator commutators."""
    _check_degree(second, first.degree)
    seeds = [commutator(x, y) for x in first.generators for y in second.generators]
    return normal_closure(first.join(second), [s for s in seeds if not s.is_Identity])


def derived_subgroup(group: PermGroup) -> PermGroup:
    return commutator_subgroup(group, group)


def perfect_core(group: PermGroup) -> PermGroup:
    """Return the last term of the derived series."""
    current = group
    while True:
        nxt = derived_subgroup(current)
        if nxt.order == current.order:
            return current
        current = nxt


def derived_series(group: PermGroup) -> list[PermGroup]:
    series = [group]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def lower_central_series(group: PermGroup) -> list[PermGroup]:
    series = [group]
    while True:
        nxt = commutator_subgroup(series[-1], group)
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def series(group: PermGroup, kind: const.SeriesKind | str) -> list[PermGroup]:
    """
    Return the requested series.

    `derived` and `lower_central` run until the terms stabilize; `perfect_core` yields the single terminal
    term of the derived series.
    """
    kind = const.SeriesKind(kind)
    if kind == const.SeriesKind.Derived:
        return derived_series(group)
    if kind == const.SeriesKind.LowerCentral:
        return lower_central_series(group)
    return [perfect_core(group)]


def is_perfect(group: PermGroup) -> bool:
    return derived_subgroup(group).order == group.order


def conjugates_under(group: PermGroup, sub: PermGroup) -> list[PermGroup]:
    """Return the orbit of `sub` under conjugation by `group`, starting with `sub` itself."""
    orbit = [sub]
    index = 0
    while index < len(orbit):
        current = orbit[index]
        index += 1
        for g in group.generators:
            image = current.conjugate(g)
            if not any(image == other for other in orbit):
                orbit.append(image)
    return orbit


def sorted_groups(groups: Iterable[PermGroup]) -> list[PermGroup]:
    """Order groups deterministically by order, then by sorted generator images."""
    return sorted(groups, key=lambda h: (h.order, sorted(perm_key(g) for g in h.generators)))
