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
"""Planted violations. Each of these suites must report findings, or the harness is passing vacuously."""
from pclose.components.pcomp import is_p_component
from pclose.corpus.hypotheses import all_of, coprime, rank_at_least
from pclose.corpus.instances import CorpusInstance
from pclose.corpus.suite import Suite, SuiteDomain, SuiteRegistry, violation
from pclose.perm.group import PermGroup
from pclose.perm.subgroups import is_subnormal, perfect_core
from pclose.properties.registry import TRIVIAL
from pclose.signalizer.functor import SignalizerFunctor, full_centralizer_functor, functor_verify


def planted_subgroup(group: PermGroup) -> PermGroup:
    """The perfect core of a point stabilizer."""
    return perfect_core(group.stabilizer(0))


def planted_non_subnormal(instance: CorpusInstance) -> str | None:
    k = planted_subgroup(instance.group)
    if k.is_trivial:
        return "trivial perfect core"
    return "planted subgroup is subnormal" if is_subnormal(instance.group, k) else None


def check_planted_component(instance: CorpusInstance) -> None:
    k = planted_subgroup(instance.group)
    if not is_p_component(instance.group, k, TRIVIAL):
        raise violation("planted non-subnormal subgroup is a trivial-component", subgroup=k)


def unbalanced_functor(functor: SignalizerFunctor) -> SignalizerFunctor:
    """The functor with `θ(e2)` replaced by the trivial group."""
    frame = functor.action.frame
    e2 = frame.normalize(tuple(int(i == 1) for i in range(frame.rank)))
    values = dict(functor.items())
    values[e2] = PermGroup.trivial(functor.action.group.degree)
    return SignalizerFunctor(functor.action, values, centralizing=functor.centralizing - {e2})


def check_planted_balance(instance: CorpusInstance) -> None:
    broken = unbalanced_functor(full_centralizer_functor(instance.action))
    report = functor_verify(broken)
    if not report.passed:
        first = report.violations[0]
        raise violation("planted functor with θ(e2) = 1 is balanced", violation=first.describe(broken))


def register(registry: SuiteRegistry) -> None:
    registry.register(
        Suite(
            "control:pc:2",
            "Planted violation: the perfect core of a point stabilizer, not subnormal, offered as a component",
            SuiteDomain.Groups,
            check_planted_component,
            hypothesis=planted_non_subnormal,
            negative_control=True,
        )
    )
    registry.register(
        Suite(
            "control:balance",
            "Planted violation: the centralizer functor with one value replaced by the trivial group",
            SuiteDomain.Actions,
            check_planted_balance,
            hypothesis=all_of(coprime, rank_at_least(2)),
            negative_control=True,
        )
    )
