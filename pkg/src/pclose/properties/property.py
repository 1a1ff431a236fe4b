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
from dataclasses import dataclass, field
import logging
from typing import Callable, Collection, Iterable

from pclose import const
from pclose.errors import PreconditionError
from pclose.perm.group import PermGroup
from pclose.perm.quotient import quotient

LOGGER = logging.getLogger(__name__)

Axiom = const.PropertyAxiom

CLOSURE_AXIOMS: frozenset[Axiom] = frozenset({Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.NormalProduct})
RESIDUAL_AXIOMS: frozenset[Axiom] = frozenset(
    {Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.IntersectionQuotient}
)
LAYER_AXIOMS: frozenset[Axiom] = frozenset(
    {Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.ExtensionClosed, Axiom.ContainsSolvable}
)

_VALIDATED: dict["Property", frozenset[Axiom]] = {}
_REFUTED: dict["Property", frozenset[Axiom]] = {}


def record_validation(prop: "Property", passed: Iterable[Axiom], failed: Iterable[Axiom]) -> None:
    """
    Record the outcome of an axiom check for `prop`.

    Refutation is permanent: an axiom with a counterexample is never admitted again, whatever later corpora show.
    """
    refuted = _REFUTED.get(prop, frozenset()) | frozenset(failed)
    _REFUTED[prop] = refuted
    _VALIDATED[prop] = (_VALIDATED.get(prop, frozenset()) | frozenset(passed)) - refuted


@dataclass(frozen=True, kw_only=True)
class Property:
    """
    A group-theoretic property.

    `predicate` must be pure. `order_test`, when given, decides the property from the group order alone and is
    used for quotients so they need not be constructed. `radical` and `residual` are fast paths computing
    `O_P` and `O^P` directly; properties without them are computed through the element-table oracle.
    `proven_axioms` are the declared axioms known to hold for every group; the remaining declared axioms are
    admitted only after `verify_axioms` has checked them over a corpus.
    """

    name: str
    predicate: Callable[[PermGroup], bool]
    declared_axioms: frozenset[Axiom] = frozenset()
    all_solvable: bool = False
    fixed_point_solvable: bool = False
    order_test: Callable[[int], bool] | None = None
    proven_axioms: frozenset[Axiom] = frozenset()
    radical: Callable[[PermGroup], PermGroup] | None = field(default=None, compare=False)
    residual: Callable[[PermGroup], PermGroup] | None = field(default=None, compare=False)

    def holds(self, group: PermGroup) -> bool:
        if self.order_test is not None:
            return self.order_test(group.order)
        return self.predicate(group)

    def __call__(self, group: PermGroup) -> bool:
        return self.holds(group)

    def holds_for_quotient(self, group: PermGroup, normal: PermGroup) -> bool:
        """Decide the property for `group/normal`."""
        if self.order_test is not None:
            return self.order_test(group.order // normal.order)
        if normal.order == group.order:
            return self.predicate(PermGroup.trivial(1))
        if normal.is_trivial:
            return self.predicate(group)
        target, _ = quotient(group, normal)
        return self.predicate(target)

    def declares(self, axioms: Iterable[Axiom]) -> bool:
        return set(axioms) <= self.declared_axioms

    @property
    def validated_axioms(self) -> frozenset[Axiom]:
        """The declared axioms that are proven or have passed `verify_axioms` without a counterexample."""
        return (self.proven_axioms | _VALIDATED.get(self, frozenset())) & self.declared_axioms

    def require(self, axioms: Collection[Axiom], operation: str) -> None:
        """
        Check that the property declares the axioms an operation depends on and that they are validated.

        :raise PreconditionError: if an axiom is undeclared or has not been validated.
        """
        needed = set(axioms)
        missing = sorted(needed - self.declared_axioms)
        if missing:
            raise PreconditionError(
                f"{operation} needs property '{self.name}' to declare: {', '.join(str(a) for a in missing)}"
            )
        refuted = sorted(needed & _REFUTED.get(self, frozenset()))
        if refuted:
            raise PreconditionError(
                f"{operation} cannot use property '{self.name}': refuted {', '.join(str(a) for a in refuted)}"
            )
        unvalidated = sorted(needed - self.validated_axioms)
        if unvalidated:
            raise PreconditionError(
                f"{operation} needs property '{self.name}' to have validated: "
                f"{', '.join(str(a) for a in unvalidated)}"
            )

    def __str__(self) -> str:
        return self.name


def fixed_point_solvability(prop: Property) -> const.FixedPointStatus:
    """
    Classify the restriction that a coprime action whose fixed points form a `P`-group forces solvability.

    It is known for the trivial, nilpotent and odd-order properties; any other property is only checked
    against the corpus.
    """
    if prop.fixed_point_solvable:
        return const.FixedPointStatus.Accepted
    return const.FixedPointStatus.CorpusTested


def trivial_action_case(prop: Property) -> bool:
    """
    Whether the restriction holds for a trivial action.

    With `A` acting trivially on `X`, `C_X(A) = X`, so the restriction says every `P`-group is solvable.
    """
    return prop.all_solvable
