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
"""Suites for the invariant closures `O_P(G;A)`, near `(A,P)`-groups and the layer closures under actors."""
from pclose import const
from pclose.closures.action import GroupAction
from pclose.closures.fixed import fixed_points, fixed_points_of, fixed_points_within
from pclose.closures.invariant import (
    enumerate_invariant_subgroups,
    is_near_ap,
    o_np_invariant,
    o_np_normal,
    o_p_invariant,
)
from pclose.components.acomp import comp_a
from pclose.corpus.hypotheses import all_of, coprime, kgroup, noncyclic_actors, within_oracle
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, sample, violation
from pclose.perm.group import PermGroup
from pclose.perm.oracle import element_table
from pclose.perm.subgroups import center, commutator_subgroup, intersection, is_normal, normalizes
from pclose.properties.extended import o_pe
from pclose.properties.property import Property
from pclose.properties.registry import ODD_ORDER, SOLVABLE, TRIVIAL, get_property
from pclose.structure.layer import components, is_simple, join_all, layer

SAMPLE_SIZE = 6


def extension_properties() -> list[Property]:
    return [TRIVIAL, SOLVABLE, ODD_ORDER, get_property("pi:2"), get_property("pi:3")]


def _invariant_normal(action: GroupAction) -> list[PermGroup]:
    table = element_table(action.group)
    maps = [table.conjugation_map(a) for a in action.actors.generators]
    return [table.subgroup(m) for m in table.normal_subgroups() if table.is_invariant(m, maps)]


def _sampled_invariant(action: GroupAction) -> list[PermGroup]:
    family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)
    return [family.table.subgroup(m) for m in sample(family.masks, SAMPLE_SIZE)]


def a_simple(instance: CorpusInstance) -> str | None:
    """Hypothesis: the only actor-invariant normal subgroups are `1` and `G`."""
    action = instance.action
    if action is None or action.group.is_trivial:
        return "not A-simple"
    return None if len(_invariant_normal(action)) == 2 else "not A-simple"


def simple_power(instance: CorpusInstance) -> str | None:
    """Hypothesis: the group is a direct power of a nonabelian simple group, normalized coordinatewise by some actor."""
    action = instance.action
    if action is None or action.structure is None:
        return "no power structure"
    factor = action.structure.factor
    if factor.is_abelian or not is_simple(factor):
        return "factor not nonabelian simple"
    return None if not _coordinate_kernel(action).is_trivial else "no actor normalizes every coordinate"


def _coordinate_kernel(action: GroupAction) -> PermGroup:
    """The actors normalizing every coordinate of a power structure."""
    structure = action.structure
    kernel = [
        action.frame.element(c)
        for c in action.frame.nonidentity()
        if all(t == i for i, t in enumerate(structure.induced(action.frame.element(c))[0]))
    ]
    return PermGroup(action.actors.degree, kernel)


def check_invariant_closure(instance: CorpusInstance) -> None:
    action = instance.action
    for prop in extension_properties():
        family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA, prop)
        joined = family.join()
        if not prop.holds(joined):
            raise violation(f"O_{prop.name}(G;A) is a {prop.name}-group", closure=joined)
        if family.table.mask_of(joined) not in family.masks:
            raise violation(f"O_{prop.name}(G;A) is the largest invariant {prop.name}-subgroup", closure=joined)
        computed = o_p_invariant(action, prop)
        if computed != joined:
            raise violation(f"o_p_invariant returns O_{prop.name}(G;A)", closure=joined, computed=computed)


def check_invariant_restriction(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    fixed = fixed_points(action)
    for prop in extension_properties():
        whole = o_p_invariant(action, prop)
        for n in _sampled_invariant(action):
            closure = o_p_invariant(action.restrict(n), prop)
            if not normalizes(fixed, closure):
                raise violation(f"C_G(A) normalizes O_{prop.name}(N;A)", subgroup=n, closure=closure)
            if closure != intersection(whole, n):
                raise violation(f"O_{prop.name}(N;A) = O_{prop.name}(G;A) ∩ N", subgroup=n, closure=closure)
            if is_normal(group, n) and not is_normal(whole, closure):
                raise violation(f"O_{prop.name}(N;A) ⊴ O_{prop.name}(G;A) for normal N", subgroup=n, closure=closure)
        structure = action.structure
        if structure is None:
            continue
        coordinates = [structure.coordinate_group(i) for i in range(structure.copies)]
        if all(action.is_invariant(c) for c in coordinates):
            product = join_all([o_p_invariant(action.restrict(c), prop) for c in coordinates], group.degree)
            if product != whole:
                raise violation(
                    f"O_{prop.name}(N;A) is the product of the coordinate closures", closure=whole, product=product
                )


def check_coordinate_kernel(instance: CorpusInstance) -> None:
    action = instance.action
    structure = action.structure
    kernel = _coordinate_kernel(action)
    fixed = fixed_points(action)
    for i in range(structure.copies):
        coordinate = structure.coordinate_group(i)
        if fixed_points_within(action, coordinate, kernel) == coordinate:
            return
    for i in range(structure.copies):
        projected = PermGroup(structure.factor_degree, [structure.project(i, g) for g in fixed.generators])
        local = fixed_points_within(action, structure.coordinate_group(i), kernel)
        expected = PermGroup(structure.factor_degree, [structure.project(i, g) for g in local.generators])
        if projected != expected:
            raise violation("C_N(A)π_i = C_{N_i}(B)", coordinate=i, kernel=kernel)
    restricted = action.with_actors(kernel)
    for prop in extension_properties():
        first, second = o_p_invariant(action, prop), o_p_invariant(restricted, prop)
        if first != second:
            raise violation(f"O_{prop.name}(N;A) = O_{prop.name}(N;B)", kernel=kernel, under_a=first, under_b=second)


def check_simple_layer_normalized(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    members = components(group)
    if not members or not all(is_simple(k) for k in members):
        return
    n = layer(group)
    restricted = action.restrict(n)
    table = element_table(group)
    acting = action.actors.join(fixed_points_within(action, n, action.actors))
    maps = [table.conjugation_map(w) for w in acting.generators]
    invariant = [table.subgroup(m) for m in table.all_subgroups() if table.is_invariant(m, maps)]
    for prop in extension_properties():
        closure = o_p_invariant(restricted, prop)
        for x in invariant:
            if prop.holds(x) and not normalizes(x, closure):
                raise violation(f"X ≤ N_G(O_{prop.name}(N;A))", layer=n, subgroup=x, closure=closure)


def check_near_extensions(instance: CorpusInstance) -> None:
    action = instance.action
    fixed = fixed_points(action)
    o_np_normal(action, SOLVABLE)
    if is_near_ap(action, action.group, SOLVABLE):
        return
    for n in _invariant_normal(action):
        fixed_in_n = fixed_points_within(action, n, action.actors)
        if is_near_ap(action, n, SOLVABLE) and SOLVABLE.holds_for_quotient(fixed, fixed_in_n):
            raise violation("G is near (A,sol) when N and G/N are", normal=n)


def check_near_closure(instance: CorpusInstance) -> None:
    action = instance.action
    whole = o_np_invariant(action, SOLVABLE)
    for n in _invariant_normal(action):
        restricted = o_np_invariant(action.restrict(n), SOLVABLE)
        if restricted != intersection(whole, n):
            raise violation("O_nsol(N;A) = O_nsol(G;A) ∩ N", normal=n, closure=whole, restricted=restricted)
    for h in _sampled_invariant(action):
        extended = o_pe(h, SOLVABLE)
        if not normalizes(extended, whole):
            raise violation("O_{sol,E}(H) normalizes O_nsol(G;A)", subgroup=h, closure=whole)


def check_a_simple_near(instance: CorpusInstance) -> None:
    action = instance.action
    if is_near_ap(action, action.group, SOLVABLE):
        return
    family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)
    for x in family.members:
        if not x.is_trivial and is_near_ap(action, x, SOLVABLE):
            raise violation("an A-simple group with an invariant near (A,sol)-subgroup is near (A,sol)", subgroup=x)


def check_near_components(instance: CorpusInstance) -> None:
    action = instance.action
    members = [m for m in comp_a(action, instance.group).members if center(m).is_trivial]
    if not members:
        return
    family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)
    near = [x for x in family.members if is_near_ap(action, x, SOLVABLE)]
    for m in members:
        if is_near_ap(action, m, SOLVABLE):
            continue
        for x in near:
            if not commutator_subgroup(x, m).is_trivial:
                raise violation("[X,L] = 1 or L is near (A,sol)", subgroup=x, component=m)


def check_fixed_point_generation(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    whole = o_pe(group, SOLVABLE)
    frame = action.frame
    by_hyperplane = join_all(
        [o_pe(fixed_points(action, b), SOLVABLE) for b in frame.hyperplanes()], group.degree
    )
    by_element = join_all(
        [o_pe(fixed_points_of(action, frame.element(c)), SOLVABLE) for c in frame.cyclic_representatives()],
        group.degree,
    )
    for name, generated in (("hyperplanes", by_hyperplane), ("elements", by_element)):
        closure = o_pe(generated, SOLVABLE)
        if closure != whole:
            raise violation(
                f"O_{{sol,E}}(G) is generated from the fixed points of the {name}", closure=whole, computed=closure
            )


def register(registry: SuiteRegistry) -> None:
    small = all_of(coprime, within_oracle, kgroup)
    suites = [
        ("p:2", "the join of the invariant P-subgroups is a P-group and is computed by o_p_invariant",
         check_invariant_closure, small),
        ("p:4", "O_P(N;A) under restriction to invariant subgroups and coordinate products",
         check_invariant_restriction, small),
        ("p:5", "coordinate projections of fixed points and closures under the coordinate kernel",
         check_coordinate_kernel, all_of(coprime, kgroup, simple_power)),
        ("p:6", "invariant P-subgroups normalize the closure of a layer of simple components",
         check_simple_layer_normalized, small),
        ("nap:3", "near (A,sol)-groups are closed under invariant normal extensions", check_near_extensions, small),
        ("nap:4", "O_nP(G;A) under intersection with normal subgroups and normalized by O_{P,E}",
         check_near_closure, small),
        ("nap:5", "A-simple groups with invariant near subgroups are near", check_a_simple_near,
         all_of(small, a_simple)),
        ("nap:6", "invariant near subgroups centralize non-near A-components with trivial center",
         check_near_components, small),
        ("md:3", "O_{P,E}(G) is generated from the fixed points of hyperplanes and of elements",
         check_fixed_point_generation, all_of(small, noncyclic_actors)),
    ]
    for suite_id, description, check, hypothesis in suites:
        registry.register(Suite(suite_id, description, SuiteDomain.Actions, check, hypothesis=hypothesis))
