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
"""Suites for the closure operators `O_P`, `O^P` and `O_{P,E}` and for declared property axioms."""
from typing import Sequence

from pclose.corpus.hypotheses import within_oracle
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, pairs, sample, violation
from pclose.perm.oracle import element_table, is_submask
from pclose.perm.subgroups import intersection
from pclose.properties.axioms import verify_axioms
from pclose.properties.closure import o_p, o_p_by_oracle, o_upper_p, o_upper_p_by_oracle
from pclose.properties.extended import o_pe
from pclose.properties.property import Property
from pclose.properties.registry import ABELIAN, NILPOTENT, ODD_ORDER, SOLVABLE, TRIVIAL, get_property

SAMPLE_SIZE = 8


def oracle_properties() -> list[Property]:
    return [TRIVIAL, NILPOTENT, SOLVABLE, ODD_ORDER, get_property("pi:2"), get_property("pi:3")]


def check_closure_oracle(instance: CorpusInstance) -> None:
    group = instance.group
    for prop in oracle_properties():
        radical, expected = o_p(group, prop), o_p_by_oracle(group, prop)
        if radical != expected:
            raise violation(f"O_{prop.name} matches the oracle", group=group, computed=radical, oracle=expected)
        residual, expected = o_upper_p(group, prop), o_upper_p_by_oracle(group, prop)
        if residual != expected:
            raise violation(f"O^{prop.name} matches the oracle", group=group, computed=residual, oracle=expected)


def check_subnormal_radicals(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    subnormal = [table.subgroup(m) for m in table.subnormal_subgroups()]
    for prop in oracle_properties():
        radical = o_p(group, prop)
        for n in subnormal:
            if prop.holds(n) and not n.is_subgroup_of(radical):
                raise violation(f"O_{prop.name}(G) contains every subnormal {prop.name}-subgroup", subnormal=n)


def check_subnormal_intersection(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    for prop in oracle_properties():
        radical = o_p(group, prop)
        for mask in table.subnormal_subgroups():
            n = table.subgroup(mask)
            if o_p(n, prop) != intersection(n, radical):
                raise violation(f"O_{prop.name}(N) = N ∩ O_{prop.name}(G)", subnormal=n, radical=radical)


def check_subgroup_intersection(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    subgroups = [table.subgroup(m) for m in sample(table.all_subgroups(), SAMPLE_SIZE)]
    for prop in oracle_properties():
        radical = o_p(group, prop)
        for h in subgroups:
            if not intersection(radical, h).is_subgroup_of(o_p(h, prop)):
                raise violation(f"O_{prop.name}(G) ∩ H ≤ O_{prop.name}(H)", subgroup=h, radical=radical)


def check_residual_products(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    normal = table.normal_subgroups()
    spanning = [(m, n) for m, n in pairs(normal) if table.join(m, n) == table.full_mask]
    for prop in oracle_properties():
        residual = o_upper_p(group, prop)
        for m, n in spanning:
            first, second = table.subgroup(m), table.subgroup(n)
            product = o_upper_p(first, prop).join(o_upper_p(second, prop))
            if product != residual:
                raise violation(f"O^{prop.name}(MN) = O^{prop.name}(M)O^{prop.name}(N)", first=first, second=second)


def check_layer_closure(instance: CorpusInstance) -> None:
    group = instance.group
    table = element_table(group)
    whole = o_pe(group, SOLVABLE)
    whole_mask = table.mask_of(whole)
    for mask in table.all_subgroups():
        if is_submask(whole_mask, mask):
            h = table.subgroup(mask)
            if o_pe(h, SOLVABLE) != whole:
                raise violation("O_{sol,E}(H) = O_{sol,E}(G) when O_{sol,E}(G) ≤ H", subgroup=h, closure=whole)
    subgroups = [table.subgroup(m) for m in sample(table.all_subgroups(), SAMPLE_SIZE)]
    closures = {i: o_pe(h, SOLVABLE) for i, h in enumerate(subgroups)}
    for i, j in pairs(list(closures)):
        h, m = subgroups[i], subgroups[j]
        if closures[i].is_subgroup_of(m) and closures[j].is_subgroup_of(h) and closures[i] != closures[j]:
            raise violation("O_{sol,E}(H) = O_{sol,E}(M) for mutually containing closures", first=h, second=m)


def axioms_check(prop: Property):
    def check(instances: Sequence[CorpusInstance]) -> None:
        report = verify_axioms(prop, [instance.group for instance in instances])
        if report.passed:
            return
        failure = report.failures[0]
        source = next(instance for instance in instances if instance.group is failure.group)
        raise violation(
            f"'{prop.name}' is {failure.axiom}",
            instance_id=source.instance_id,
            instance=source.to_spec(),
            **failure.witnesses,
        )

    return check


def register(registry: SuiteRegistry) -> None:
    per_group = [
        ("closure:oracle", "O_P and O^P match the normal-subgroup oracle", check_closure_oracle),
        ("pc:3(a)", "O_P(G) contains every subnormal P-subgroup", check_subnormal_radicals),
        ("pc:3(b)", "O_P(N) = N ∩ O_P(G) for subnormal N", check_subnormal_intersection),
        ("pc:3(c)", "O_P(G) ∩ H ≤ O_P(H) for sampled subgroups H", check_subgroup_intersection),
        ("pc:3(d)", "O^P(G) = O^P(M)O^P(N) when G = MN with M, N normal", check_residual_products),
        ("md:2", "O_{P,E}(H) = O_{P,E}(G) above O_{P,E}(G), and for mutually containing pairs", check_layer_closure),
    ]
    for suite_id, description, check in per_group:
        registry.register(Suite(suite_id, description, SuiteDomain.Groups, check, hypothesis=within_oracle))
    for prop in (TRIVIAL, NILPOTENT, SOLVABLE, ODD_ORDER):
        registry.register(
            Suite(
                f"axioms:{prop.name}",
                f"The declared axioms of '{prop.name}' hold over the tier",
                SuiteDomain.Corpus,
                corpus_check=axioms_check(prop),
            )
        )
    registry.register(
        Suite(
            "axioms:abelian",
            "Planted violation: 'abelian' declares closure under normal products",
            SuiteDomain.Corpus,
            corpus_check=axioms_check(ABELIAN),
            negative_control=True,
        )
    )
