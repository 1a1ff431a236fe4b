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
"""Suites for `P`-components, `(A,P)`-components and their embedding into the components of the whole group."""
from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import GroupAction
from pclose.closures.fixed import commutator_in, fixed_points_within
from pclose.closures.invariant import InvariantSubgroupFamily, enumerate_invariant_subgroups
from pclose.components.acomp import comp_a, comp_ap, embedding_report, is_ap_component
from pclose.components.pcomp import comp_p
from pclose.corpus.hypotheses import all_of, coprime, has_action, kgroup, within_oracle
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, pairs, sample, violation
from pclose.corpus.suites.properties import oracle_properties
from pclose.perm.group import PermGroup
from pclose.perm.oracle import element_table, is_submask
from pclose.perm.quotient import quotient
from pclose.perm.subgroups import (
    center,
    commutator_subgroup,
    intersection,
    is_normal,
    is_perfect,
    normal_closure,
    normalizes,
)
from pclose.properties.closure import o_p
from pclose.properties.property import Property, fixed_point_solvability
from pclose.properties.registry import NILPOTENT, SOLVABLE
from pclose.structure.layer import components, layer
from pclose.structure.radical import solvable_radical

SAMPLE_SIZE = 6


def _radical_quotient(group: PermGroup, prop: Property) -> PermGroup:
    """`group / O_P(group)` as a permutation group."""
    radical = o_p(group, prop)
    if radical.is_trivial:
        return group
    target, _ = quotient(group, radical)
    return target


def _commutes_into(first: PermGroup, second: PermGroup, target: PermGroup) -> bool:
    return commutator_subgroup(first, second).is_subgroup_of(target)


def _invariant_subnormal(action: GroupAction) -> list[PermGroup]:
    table = element_table(action.group)
    maps = [table.conjugation_map(a) for a in action.actors.generators]
    return [table.subgroup(m) for m in table.subnormal_subgroups() if table.is_invariant(m, maps)]


def check_unique_maximal_normal(instance: CorpusInstance) -> None:
    for prop in oracle_properties():
        for k in comp_p(instance.group, prop).members:
            if not is_perfect(k):
                raise violation(f"{prop.name}-components are perfect", component=k)
            image = _radical_quotient(k, prop)
            table = element_table(image)
            proper = [m for m in table.normal_subgroups() if m != table.full_mask]
            maximal = [m for m in proper if not any(m != n and is_submask(m, n) for n in proper)]
            if maximal != [table.center_of(table.full_mask)]:
                raise violation(
                    f"Z(K mod O_{prop.name}(K)) is the unique maximal normal subgroup of a {prop.name}-component",
                    component=k,
                    maximal_count=len(maximal),
                )


def check_subnormal_dichotomy(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    subnormal = [table.subgroup(m) for m in table.subnormal_subgroups()]
    for prop in oracle_properties():
        for k in comp_p(group, prop).members:
            radical = o_p(k, prop)
            for n in subnormal:
                if not k.is_subgroup_of(n) and not _commutes_into(k, n, radical):
                    raise violation(f"K ≤ N or [K,N] ≤ O_{prop.name}(K)", component=k, subnormal=n)


def check_distinct_components(instance: CorpusInstance) -> None:
    for prop in oracle_properties():
        for k, m in pairs(comp_p(instance.group, prop).members):
            if k == m:
                raise violation(f"{prop.name}-components are distinct", component=k)
            if not _commutes_into(k, m, intersection(o_p(k, prop), o_p(m, prop))):
                raise violation(f"[K,L] ≤ O_{prop.name}(K) ∩ O_{prop.name}(L)", first=k, second=m)


def check_radical_commutators(instance: CorpusInstance) -> None:
    group = instance.group
    for prop in oracle_properties():
        below = o_p(group, prop).join(solvable_radical(group))
        for k in comp_p(group, prop).members:
            if not _commutes_into(k, below, o_p(k, prop)):
                raise violation(f"[K, O_{prop.name}(G)Sol(G)] ≤ O_{prop.name}(K)", component=k, radical=below)


def check_component_bijection(instance: CorpusInstance) -> None:
    group = instance.group
    for prop in oracle_properties():
        if not prop.all_solvable:
            continue
        count = len(comp_p(group, prop))
        expected = len(components(_radical_quotient(group, prop)))
        if count != expected:
            raise violation(
                f"{prop.name}-components correspond to the components of G/O_{prop.name}(G)",
                group=group,
                lifted=count,
                components=expected,
            )


def check_orbit_components(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    for prop in oracle_properties():
        members = comp_ap(action, group, prop).members
        for k, m in pairs(members):
            if k == m:
                raise violation(f"distinct orbits give distinct (A,{prop.name})-components", component=k)
        for k in members:
            if not is_ap_component(action, group, k, prop):
                raise violation(f"orbit joins are (A,{prop.name})-components", component=k)


def check_invariant_components(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    subnormal = _invariant_subnormal(action)
    solvable = solvable_radical(group)
    for prop in oracle_properties():
        members = comp_ap(action, group, prop).members
        below = o_p(group, prop).join(solvable)
        for k in members:
            radical = o_p(k, prop)
            for n in subnormal:
                if not k.is_subgroup_of(n) and not _commutes_into(k, n, radical):
                    raise violation(
                        f"K ≤ N or [K,N] ≤ O_{prop.name}(K) for A-invariant N", component=k, subnormal=n
                    )
            if not _commutes_into(k, below, radical):
                raise violation(f"[K, O_{prop.name}(G)Sol(G)] ≤ O_{prop.name}(K)", component=k, radical=below)
            if not is_normal(normal_closure(group, k), k):
                raise violation("K ⊴ ⟨K^G⟩", component=k)
        for k, m in pairs(members):
            if not _commutes_into(k, m, intersection(o_p(k, prop), o_p(m, prop))):
                raise violation(f"[K,L] ≤ O_{prop.name}(K) ∩ O_{prop.name}(L)", first=k, second=m)


def _centralizer_invariant(action: GroupAction, k: PermGroup) -> list[PermGroup]:
    """Subgroups of `G` invariant under `A C_K(A)`."""
    table = element_table(action.group)
    acting = action.actors.join(fixed_points_within(action, k, action.actors))
    maps = [table.conjugation_map(w) for w in acting.generators]
    return [table.subgroup(m) for m in table.all_subgroups() if table.is_invariant(m, maps)]


def check_trivial_intersection_commutes(instance: CorpusInstance) -> None:
    action = instance.action
    for k in comp_a(action, instance.group).members:
        z = center(k)
        for h in _centralizer_invariant(action, k):
            if intersection(h, k).is_subgroup_of(z) and not commutator_subgroup(h, k).is_trivial:
                raise violation("[H,K] = 1 when H ∩ K ≤ Z(K)", component=k, subgroup=h)


def check_normalizing_dichotomy(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    table = element_table(group)
    maps = [table.conjugation_map(a) for a in action.actors.generators]
    invariant = [table.subgroup(m) for m in table.all_subgroups() if table.is_invariant(m, maps)]
    for k in comp_a(action, group).members:
        fixed = fixed_points_within(action, k, action.actors)
        for prop in (SOLVABLE, NILPOTENT):
            if prop.holds_for_quotient(fixed, intersection(fixed, center(k))):
                continue
            for x in invariant:
                if not normalizes(fixed, x) or not prop.holds(commutator_subgroup(x, fixed)):
                    continue
                if not normalizes(x, k):
                    raise violation(
                        f"P ≤ N_G(K) or C_{{K/Z(K)}}(A) is a {prop.name}-group", component=k, subgroup=x
                    )


def _sampled(family: InvariantSubgroupFamily) -> list[PermGroup]:
    return [family.table.subgroup(m) for m in sample(family.masks, SAMPLE_SIZE)]


def _normalizes_components(x: PermGroup, group: PermGroup) -> bool:
    return all(normalizes(x, c) for c in components(group))


def check_unique_a_component(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    whole_layer = layer(group)
    semisimple = solvable_radical(group).is_trivial
    a_components = comp_a(action, group).members
    for h in _sampled(enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)):
        for prop in oracle_properties():
            for k in comp_ap(action, h, prop).members:
                if not k.is_subgroup_of(whole_layer) and not (semisimple and _normalizes_components(k, group)):
                    continue
                containing = [m for m in a_components if k.is_subgroup_of(m)]
                if len(containing) != 1:
                    raise violation(
                        f"a unique A-component contains each (A,{prop.name})-component",
                        subgroup=h,
                        component=k,
                        containing=len(containing),
                    )


def check_layer_normalizes(instance: CorpusInstance) -> None:
    action = instance.action
    a_components = comp_a(action, instance.group).members
    for h in _sampled(enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)):
        for prop in oracle_properties():
            x = o_p(h, prop).join(comp_p(h, prop).layer)
            for m in a_components:
                if normalizes(x, m) and _normalizes_components(x, m):
                    continue
                fixed = fixed_points_within(action, m, action.actors)
                if not prop.holds_for_quotient(fixed, intersection(fixed, center(m))):
                    raise violation(
                        f"O_{prop.name}(H)L_{prop.name}(H) normalizes L and its components, "
                        f"or C_{{L/Z(L)}}(A) is a {prop.name}-group",
                        subgroup=h,
                        component=m,
                    )


def _single_actor_families(action: GroupAction) -> list[tuple[Permutation, list[PermGroup]]]:
    result = []
    for coords in action.frame.cyclic_representatives():
        a = action.frame.element(coords)
        family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGa, a=a)
        result.append((a, _sampled(family)))
    return result


def check_nilpotent_solvable_embedding(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    nilpotent = comp_ap(action, group, NILPOTENT)
    solvable = comp_ap(action, group, SOLVABLE)
    for a, subgroups in _single_actor_families(action):
        for h in subgroups:
            for k in comp_a(action, h).members:
                if not nilpotent.containing(k):
                    raise violation("A-components of H lie in (A,nil)-components", actor=a, subgroup=h, component=k)
            for k in comp_ap(action, h, NILPOTENT).members:
                if not solvable.containing(k):
                    raise violation(
                        "(A,nil)-components of H lie in (A,sol)-components", actor=a, subgroup=h, component=k
                    )


def check_commutator_components(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    for a, subgroups in _single_actor_families(action):
        for h in subgroups:
            for prop in oracle_properties():
                if not prop.all_solvable:
                    continue
                for k in comp_ap(action, h, prop).members:
                    if commutator_in(k, a) != k:
                        continue
                    if not is_ap_component(action, group, k, prop):
                        raise violation(
                            f"K = [K,a] in Comp_{{A,{prop.name}}}(H) is an (A,{prop.name})-component of G",
                            actor=a,
                            subgroup=h,
                            component=k,
                        )


def check_solvable_embedding(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    solvable_components = comp_p(group, SOLVABLE).members
    accepted = [p for p in oracle_properties() if fixed_point_solvability(p) == const.FixedPointStatus.Accepted]
    for h in _sampled(enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)):
        for prop in accepted:
            x = o_p(h, prop).join(comp_p(h, prop).layer)
            for m in solvable_components:
                if not normalizes(x, m):
                    raise violation(
                        f"O_{prop.name}(H)L_{prop.name}(H) acts trivially on Comp_sol(G)", subgroup=h, component=m
                    )
            for k in comp_ap(action, h, prop).members:
                if embedding_report(action, h, k, prop).is_violation:
                    raise violation(
                        f"an (A,sol)-component of G contains each (A,{prop.name})-component of H",
                        subgroup=h,
                        component=k,
                    )


def register(registry: SuiteRegistry) -> None:
    per_group = [
        ("pc:4(c)", "P-components are perfect with a unique maximal normal subgroup", check_unique_maximal_normal),
        ("pc:4(d)", "K ≤ N or [K,N] ≤ O_P(K) for subnormal N", check_subnormal_dichotomy),
        ("pc:4(f)", "distinct P-components commute modulo their P-radicals", check_distinct_components),
        ("pc:4(i)", "[K, O_P(G)Sol(G)] ≤ O_P(K)", check_radical_commutators),
        ("pc:4(j)", "P-components correspond to components of G/O_P(G) when P-groups are solvable",
         check_component_bijection),
    ]
    for suite_id, description, check in per_group:
        registry.register(Suite(suite_id, description, SuiteDomain.Groups, check, hypothesis=within_oracle))
    acting = all_of(has_action, within_oracle)
    coprime_kgroup = all_of(coprime, within_oracle, kgroup)
    per_action = [
        ("ap:3", "actor-orbit joins of P-components are the (A,P)-components", check_orbit_components, acting),
        ("ap:4", "(A,P)-components against invariant subnormal subgroups and each other",
         check_invariant_components, acting),
        ("prel:1", "[H,K] = 1 for A C_K(A)-invariant H meeting K centrally", check_trivial_intersection_commutes,
         coprime_kgroup),
        ("prel:2", "invariant subgroups normalize A-components or C_{K/Z(K)}(A) has the property",
         check_normalizing_dichotomy, coprime_kgroup),
        ("lglob:5(a)", "K = [K,a] in Comp_{A,P}(H) is an (A,P)-component of G", check_commutator_components,
         coprime_kgroup),
        ("lglob:5(b)", "(A,P)-components of invariant subgroups embed in (A,sol)-components",
         check_solvable_embedding, coprime_kgroup),
        ("lglob:6", "a unique A-component contains each qualifying (A,P)-component", check_unique_a_component,
         coprime_kgroup),
        ("lglob:7", "O_P(H)L_P(H) normalizes each A-component or its fixed points have the property",
         check_layer_normalizes, coprime_kgroup),
        ("lglob:8", "components of A C_G(a)-invariant subgroups embed upwards", check_nilpotent_solvable_embedding,
         coprime_kgroup),
    ]
    for suite_id, description, check, hypothesis in per_action:
        registry.register(Suite(suite_id, description, SuiteDomain.Actions, check, hypothesis=hypothesis))
