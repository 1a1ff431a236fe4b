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
"""Exhaustive checks of declared closure axioms over a corpus of small groups."""
from dataclasses import dataclass, field
import itertools
import logging
from typing import Callable, Iterator, Sequence

from pclose.errors import PreconditionError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import ElementTable, element_table, within_oracle_bound
from pclose.properties.property import Axiom, Property, record_validation

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomFailure:
    """A counterexample to a declared axiom, found inside `group`."""

    axiom: Axiom
    group: PermGroup
    witnesses: dict[str, PermGroup]

    def describe(self) -> str:
        parts = ", ".join(f"{name} of order {g.order}" for name, g in self.witnesses.items())
        return f"{self.axiom} fails in a group of order {self.group.order}: {parts}"


@dataclass
class AxiomReport:
    """Outcome of `verify_axioms`: cases checked per axiom and the first failure of each failing axiom."""

    prop: Property
    checked: dict[Axiom, int] = field(default_factory=dict)
    failures: list[AxiomFailure] = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def failure_for(self, axiom: Axiom) -> AxiomFailure | None:
        return next((f for f in self.failures if f.axiom == axiom), None)


Witness = dict[str, PermGroup]
_Check = Callable[[ElementTable, Property], Iterator[Witness | None]]


def _subgroup_closed(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    if not prop.holds(table.group):
        return
    for mask in table.all_subgroups():
        sub = table.subgroup(mask)
        yield None if prop.holds(sub) else {"subgroup": sub}


def _quotient_closed(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    if not prop.holds(table.group):
        return
    for mask in table.normal_subgroups():
        normal = table.subgroup(mask)
        yield None if prop.holds_for_quotient(table.group, normal) else {"kernel": normal}


def _intersection_quotient(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    group = table.group
    good = [m for m in table.normal_subgroups() if prop.holds_for_quotient(group, table.subgroup(m))]
    for first, second in itertools.combinations(good, 2):
        meet = table.subgroup(first & second)
        if prop.holds_for_quotient(group, meet):
            yield None
        else:
            yield {"first": table.subgroup(first), "second": table.subgroup(second), "intersection": meet}


def _normal_product(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    good = [m for m in table.normal_subgroups() if prop.holds(table.subgroup(m))]
    for first, second in itertools.combinations(good, 2):
        product = table.subgroup(table.join(first, second))
        if prop.holds(product):
            yield None
        else:
            yield {"first": table.subgroup(first), "second": table.subgroup(second), "product": product}


def _extension_closed(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    group = table.group
    whole = prop.holds(group)
    for mask in table.normal_subgroups():
        normal = table.subgroup(mask)
        if prop.holds(normal) and prop.holds_for_quotient(group, normal):
            yield None if whole else {"kernel": normal}


def _contains_solvable(table: ElementTable, prop: Property) -> Iterator[Witness | None]:
    for mask in table.normal_subgroups():
        sub = table.subgroup(mask)
        if sub.is_solvable:
            yield None if prop.holds(sub) else {"solvable": sub}


_CHECKS: dict[Axiom, _Check] = {
    Axiom.SubgroupClosed: _subgroup_closed,
    Axiom.QuotientClosed: _quotient_closed,
    Axiom.IntersectionQuotient: _intersection_quotient,
    Axiom.NormalProduct: _normal_product,
    Axiom.ExtensionClosed: _extension_closed,
    Axiom.ContainsSolvable: _contains_solvable,
}


def verify_axioms(prop: Property, corpus: Sequence[PermGroup]) -> AxiomReport:
    """
    Test every declared axiom of `prop` inside each corpus group: over its subgroups, its normal subgroups
    and pairs of them, and its quotients. Groups beyond the oracle bound are skipped.

    Failures are data: the first counterexample of each failing axiom is recorded in corpus order. The outcome is
    recorded on the property: axioms checked at least once without a counterexample become validated for
    `Property.require`, failing axioms are refuted.

    :raise PreconditionError: if the corpus is empty.
    """
    if not corpus:
        raise PreconditionError("Axiom verification needs a nonempty corpus")
    report = AxiomReport(prop, {axiom: 0 for axiom in sorted(prop.declared_axioms)})
    failing: set[Axiom] = set()
    for group in corpus:
        if not within_oracle_bound(group):
            report.skipped += 1
            continue
        table = element_table(group)
        for axiom in report.checked:
            if axiom in failing:
                continue
            for witness in _CHECKS[axiom](table, prop):
                report.checked[axiom] += 1
                if witness is not None:
                    report.failures.append(AxiomFailure(axiom, group, witness))
                    failing.add(axiom)
                    LOGGER.info("Property '%s' fails %s in a group of order %d", prop.name, axiom, group.order)
                    break
    record_validation(prop, [a for a, count in report.checked.items() if count and a not in failing], failing)
    return report
