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
"""Suites for signalizer functors built from the centralizers of the actors."""
from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import CoprimeAction
from pclose.closures.fixed import commutator_in
from pclose.closures.invariant import enumerate_invariant_subgroups
from pclose.components.pcomp import comp_p
from pclose.corpus.hypotheses import all_of, coprime, kgroup, nontrivial_actors, rank_at_least, within_oracle
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, sample, violation
from pclose.corpus.suites.closures import extension_properties
from pclose.perm.group import PermGroup
from pclose.perm.subgroups import centralizer, normalizes
from pclose.properties.extended import o_pe
from pclose.properties.registry import SOLVABLE
from pclose.signalizer.completeness import completeness, functor_closure, hyperplane_values
from pclose.signalizer.derived import derive_functor, subfunctor_psi
from pclose.signalizer.functor import (
    SignalizerFunctor,
    full_centralizer_functor,
    is_theta_subgroup,
    trivial_functor,
)
from pclose.signalizer.gorenstein_lyons import gorenstein_lyons_check
from pclose.structure.composition import composition_factors
from pclose.structure.layer import join_all
from pclose.structure.radical import solvable_radical
from pclose.structure.simple_groups import order_of_label

SAMPLE_SIZE = 6


def corpus_functors(action: CoprimeAction) -> list[SignalizerFunctor]:
    return [full_centralizer_functor(action), trivial_functor(action)]


def check_hyperplane_generation(instance: CorpusInstance) -> None:
    for functor in corpus_functors(instance.action):
        closure = functor_closure(functor)
        generated = join_all([value for _, value in hyperplane_values(functor)], closure.degree)
        if generated != closure:
            raise violation("⟨θ(a) : a ∈ A#⟩ = ⟨θ(B) : B ∈ hyp(A)⟩", closure=closure, generated=generated)


def check_theta_layer(instance: CorpusInstance) -> None:
    for functor in corpus_functors(instance.action):
        closure = functor_closure(functor)
        by_element = join_all([o_pe(value, SOLVABLE) for _, value in functor.items()], closure.degree)
        by_hyperplane = join_all([o_pe(value, SOLVABLE) for _, value in hyperplane_values(functor)], closure.degree)
        extended = o_pe(by_element, SOLVABLE)
        for name, h in (("H_1", by_element), ("H_2", by_hyperplane)):
            if not any(h.is_subgroup_of(x) and is_theta_subgroup(functor, x) for x in (h, closure)):
                continue
            if not is_theta_subgroup(functor, h):
                raise violation(f"{name} is a θ-subgroup", subgroup=h)
            if not normalizes(closure, extended):
                raise violation("O_{P,E}(H_1) ⊴ G̃", subgroup=by_element, closure=closure)


def check_near_closure_normalized(instance: CorpusInstance) -> None:
    for functor in corpus_functors(instance.action):
        near = derive_functor(functor, const.FunctorMode.NearP, SOLVABLE)
        if not completeness(near).complete:
            continue
        closure = functor_closure(near)
        for functional, value in hyperplane_values(functor):
            if not normalizes(o_pe(value, SOLVABLE), closure):
                raise violation(
                    "O_{P,E}(θ(B)) ≤ N_G(θ_nP(G))", hyperplane=str(functional), value=value, closure=closure
                )


def check_derived_functors(instance: CorpusInstance) -> None:
    for functor in corpus_functors(instance.action):
        derived = [derive_functor(functor, const.FunctorMode.P, prop) for prop in extension_properties()]
        derived.append(derive_functor(functor, const.FunctorMode.NearP, SOLVABLE))
        for child in derived:
            for coords, value in child.items():
                if not value.is_subgroup_of(functor.value(coords)):
                    raise violation("derived values lie in θ(a)", a=functor.word(coords), value=value)


def check_gorenstein_lyons(instance: CorpusInstance) -> None:
    for functor in corpus_functors(instance.action):
        report = gorenstein_lyons_check(functor)
        if not report.passed:
            raise violation(
                "θ is complete when A acts trivially on every Comp_sol(θ(a))",
                closure=functor_closure(functor),
            )


def check_subfunctors(instance: CorpusInstance) -> None:
    action = instance.action
    frame = action.frame
    basis = [frame.element(tuple(int(i == j) for j in range(frame.rank))) for i in range(frame.rank)]
    for functor in corpus_functors(action):
        for t in basis:
            subfunctor_psi(functor, t)


def _acts_trivially(t: Permutation, members: tuple[PermGroup, ...]) -> bool:
    return all(normalizes(t, k) for k in members)


def check_trivial_on_subgroups(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    whole = comp_p(group, SOLVABLE).members
    family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)
    subgroups = [family.table.subgroup(m) for m in sample(family.masks, SAMPLE_SIZE)]
    for coords in action.frame.cyclic_representatives():
        t = action.frame.element(coords)
        if not _acts_trivially(t, whole):
            continue
        for m in subgroups:
            if not _acts_trivially(t, comp_p(m, SOLVABLE).members):
                raise violation("t acts trivially on Comp_sol(M)", t=t, subgroup=m)


def _nonabelian_factor_orders(group: PermGroup) -> list[int]:
    orders = []
    for label in composition_factors(group):
        if label.startswith("C") and label[1:].isdigit():
            continue
        order = order_of_label(label)
        if order is not None:
            orders.append(order)
    return orders


def check_section_orders(instance: CorpusInstance) -> None:
    action = instance.action
    group = instance.group
    members = comp_p(group, SOLVABLE).members
    bound = max((k.order // solvable_radical(k).order for k in members), default=1)
    for coords in action.frame.cyclic_representatives():
        t = action.frame.element(coords)
        if not _acts_trivially(t, members):
            continue
        fixed = centralizer(commutator_in(group, t), t)
        for order in _nonabelian_factor_orders(fixed):
            if order >= bound:
                raise violation("|S| < |L/Sol(L)| for a simple section S of C_[H,t](t)", t=t, section_order=order)


def register(registry: SuiteRegistry) -> None:
    functorial = all_of(coprime, nontrivial_actors, kgroup)
    small = all_of(functorial, within_oracle)
    suites = [
        ("md:5", "hyperplane values generate the closure of a functor", check_hyperplane_generation,
         all_of(functorial, rank_at_least(2))),
        ("md:6", "layer closures of functor values inside a θ-subgroup are normalized by the closure",
         check_theta_layer, all_of(functorial, rank_at_least(2))),
        ("md:7", "O_{P,E}(θ(B)) normalizes a complete θ_nP closure", check_near_closure_normalized,
         all_of(small, rank_at_least(2))),
        ("p:3", "θ_P and θ_nP are signalizer functors", check_derived_functors, small),
        ("gor:2", "functors whose values have actor-fixed solvable-components are complete",
         check_gorenstein_lyons, all_of(functorial, rank_at_least(3))),
        ("gor:4", "ψ is a θ(A)-invariant subfunctor for every basis actor", check_subfunctors, functorial),
        ("gor:6", "t trivial on Comp_sol(H) stays trivial on Comp_sol(M) for invariant M",
         check_trivial_on_subgroups, small),
        ("gor:7", "nonabelian simple sections of C_[H,t](t) are smaller than L/Sol(L)", check_section_orders,
         functorial),
    ]
    for suite_id, description, check, hypothesis in suites:
        registry.register(Suite(suite_id, description, SuiteDomain.Actions, check, hypothesis=hypothesis))
