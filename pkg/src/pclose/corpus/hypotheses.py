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
Hypothesis predicates for suites.

A predicate returns `None` when an instance satisfies the hypothesis and otherwise a short reason, which is
how the instance is reported as skipped.
"""
from typing import Callable

from pclose.closures.action import CoprimeAction
from pclose.corpus.instances import CorpusInstance
from pclose.perm.oracle import within_oracle_bound
from pclose.structure.composition import composition_factors, is_kgroup

Hypothesis = Callable[[CorpusInstance], str | None]


def within_oracle(instance: CorpusInstance) -> str | None:
    if not within_oracle_bound(instance.group):
        return "beyond oracle bound"
    return None


def has_action(instance: CorpusInstance) -> str | None:
    return None if instance.action is not None else "no action"


def coprime(instance: CorpusInstance) -> str | None:
    if instance.action is None:
        return "no action"
    return None if isinstance(instance.action, CoprimeAction) else "action not coprime"


def nontrivial_actors(instance: CorpusInstance) -> str | None:
    if instance.action is None or instance.action.actors.is_trivial:
        return "trivial actors"
    return None


def noncyclic_actors(instance: CorpusInstance) -> str | None:
    if instance.action is None or instance.action.rank < 2:
        return "cyclic actors"
    return None


def rank_at_least(rank: int) -> Hypothesis:
    def check(instance: CorpusInstance) -> str | None:
        if instance.action is None or instance.action.rank < rank:
            return f"actor rank below {rank}"
        return None

    return check


def kgroup(instance: CorpusInstance) -> str | None:
    action = instance.action
    group = action.structure.factor if action is not None and action.structure is not None else instance.group
    return None if is_kgroup(composition_factors(group)) else "not a K-group"


def nonsolvable(instance: CorpusInstance) -> str | None:
    return None if not instance.group.is_solvable else "solvable"


def all_of(*hypotheses: Hypothesis) -> Hypothesis:
    """The conjunction of hypotheses; the first failing one names the reason."""

    def check(instance: CorpusInstance) -> str | None:
        for hypothesis in hypotheses:
            reason = hypothesis(instance)
            if reason is not None:
                return reason
        return None

    return check
