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
"""Engine and structure suites: the group algorithms against brute-force enumeration."""
import math

from sympy.combinatorics import Permutation

from pclose.corpus.hypotheses import within_oracle
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, pairs, sample, violation
from pclose.perm.oracle import element_table, mask_order
from pclose.perm.quotient import quotient
from pclose.perm.subgroups import (
    center,
    centralizer,
    commutator_subgroup,
    derived_subgroup,
    is_subnormal,
    normal_closure,
)
from pclose.settings import get_settings
from pclose.structure.composition import composition_factors
from pclose.structure.layer import components, generalized_fitting, is_quasisimple
from pclose.structure.radical import solvable_radical
from pclose.structure.simple_groups import order_of_label
from pclose.utils import random_index

SAMPLE_SIZE = 8


def random_permutation(degree: int) -> Permutation:
    images = list(range(degree))
    for i in range(degree - 1, 0, -1):
        j = random_index(i + 1)
        images[i], images[j] = images[j], images[i]
    return Permutation(images)


def check_oracle(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    if mask_order(table.full_mask) != group.order:
        raise violation("order equals the element count", group=group, count=mask_order(table.full_mask))
    members = {tuple(p.array_form) for p in table.elements}
    for _ in range(SAMPLE_SIZE):
        g = random_permutation(group.degree)
        if group.contains(g) != (tuple(g.array_form) in members):
            raise violation("membership agrees with enumeration", group=group, element=g)
    for x in sample(table.elements, SAMPLE_SIZE):
        commuting = sum(1 for y in table.elements if x * y == y * x)
        computed = centralizer(group, x)
        if computed.order != commuting or not all(x * g == g * x for g in computed.generators):
            raise violation("centralizer agrees with enumeration", group=group, element=x, centralizer=computed)
        index = table.index_of(x)
        smallest = min((m for m in table.normal_subgroups() if m >> index & 1), key=mask_order)
        closure = normal_closure(group, [x])
        if closure != table.subgroup(smallest):
            raise violation("normal closure agrees with enumeration", group=group, element=x, closure=closure)


def check_quotients(instance: CorpusInstance) -> None:
    group = instance.group
    for normal in (derived_subgroup(group), center(group), solvable_radical(group)):
        if normal.is_trivial or normal.order == group.order:
            continue
        target, hom = quotient(group, normal)
        if target.order * normal.order != group.order:
            raise violation("|G/N| · |N| = |G|", group=group, normal=normal, quotient=target)
        if not hom.check_random_pairs(100):
            raise violation("the projection is a homomorphism", group=group, normal=normal)


def check_radical(instance: CorpusInstance) -> None:
    group = instance.group
    radical = solvable_radical(group)
    if not radical.is_trivial and radical.order != group.order:
        target, _ = quotient(group, radical)
        if not solvable_radical(target).is_trivial:
            raise violation("Sol(G/Sol(G)) = 1", group=group, radical=radical)
    orders = [order_of_label(label) for label in composition_factors(group).elements()]
    if all(o is not None for o in orders) and math.prod(orders) != group.order:
        raise violation("composition factor orders multiply to |G|", group=group)
    if group.order <= get_settings().exhaustive_order_limit:
        star = generalized_fitting(group)
        if not centralizer(group, star).is_subgroup_of(star):
            raise violation("F*(G) is self-centralizing", group=group, generalized_fitting=star)


def check_components(instance: CorpusInstance) -> None:
    group = instance.group
    found = components(group)
    for k in found:
        if not is_subnormal(group, k) or not is_quasisimple(k):
            raise violation("components are subnormal and quasisimple", group=group, component=k)
    for k, l in pairs(found):
        if k == l:
            raise violation("components are distinct", group=group, component=k)
        bracket = commutator_subgroup(k, l)
        if not (bracket.is_subgroup_of(center(k)) and bracket.is_subgroup_of(center(l))):
            raise violation("commutators of components lie in both centers", first=k, second=l)


def register(registry: SuiteRegistry) -> None:
    registry.register(
        Suite(
            "engine:oracle",
            "Order, membership, centralizers and normal closures agree with element enumeration",
            SuiteDomain.All,
            check_oracle,
            hypothesis=within_oracle,
        )
    )
    registry.register(
        Suite(
            "engine:quotient",
            "Quotients by the derived subgroup, center and solvable radical have the right order and map",
            SuiteDomain.All,
            check_quotients,
        )
    )
    registry.register(
        Suite(
            "structure:radical",
            "Sol(G/Sol(G)) = 1, composition factors multiply to |G| and F*(G) is self-centralizing",
            SuiteDomain.All,
            check_radical,
        )
    )
    registry.register(
        Suite(
            "structure:components",
            "Components are distinct, subnormal, quasisimple, with commutators in both centers",
            SuiteDomain.All,
            check_components,
        )
    )
