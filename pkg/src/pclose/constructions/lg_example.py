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
A coprime action whose fixed-point subgroup has an `(A,sol)`-component that lies in no `(A,sol)`-component of
the whole group.

`J = PSL(2, 2^r)` with its Frobenius `a1` of order `r`, a nonabelian simple `K` of order `n` permuting `n`
copies of `J` regularly, `G = J^n ⋊ K` and `a = a1 a2 ... an` centralizing `K`. The group `G` is far too large
to build; only the factor is materialized. Claims about `G` and `C_G(a)` are computed on
smaller models of the same shape; a claim whose model is too large is reported as unverified.
"""
from dataclasses import dataclass
from enum import StrEnum
import logging
import math
from typing import Final

from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import CoprimeAction, GroupAction
from pclose.closures.fixed import fixed_points
from pclose.compat.pydantic import pyd
from pclose.components.acomp import comp_ap
from pclose.components.pcomp import comp_p
from pclose.constructions.named import alternating
from pclose.constructions.power import PowerStructure, build_power_action
from pclose.constructions.psl2 import build_psl2
from pclose.dto import BaseDto
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import identity
from pclose.perm.subgroups import centralizer, normalizes
from pclose.properties.registry import SOLVABLE
from pclose.structure.composition import composition_factors
from pclose.structure.layer import is_simple
from pclose.structure.simple_groups import order_of_label

LOGGER = logging.getLogger(__name__)

SUPPORTED_PRIMES: Final[frozenset[int]] = frozenset({5, 7})
DEFAULT_K_LABEL: Final[str] = "A5"
# Largest degree of the J^r sample with a regular C_r used to check the fixed-point formula.
SAMPLE_DEGREE_LIMIT: Final[int] = 200
# Models of C_G(a) and G have K = A5 permuting this many copies; the model of G uses J = PSL(2, 2^2).
MODEL_COPIES: Final[int] = 5
MODEL_EXTENSION_DEGREE: Final[int] = 2


class ClaimStatus(StrEnum):
    Passed = "passed"
    Failed = "failed"
    Unverified = "unverified"


@dataclass(frozen=True)
class LgExampleInstance:
    r: int
    factor: PermGroup
    automorphism: Permutation
    k_label: str
    n: int
    structural: bool = True

    def factor_action(self) -> CoprimeAction:
        """`⟨a1⟩` acting on `J`, the only part of the example that is built."""
        return CoprimeAction.from_parts(self.factor, PermGroup(self.factor.degree, [self.automorphism]), self.r)


@dataclass(frozen=True)
class ExampleClaim:
    name: str
    status: ClaimStatus
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == ClaimStatus.Passed

    @property
    def computed(self) -> bool:
        return self.status != ClaimStatus.Unverified


def _status(passed: bool) -> ClaimStatus:
    return ClaimStatus.Passed if passed else ClaimStatus.Failed


class ExampleClaimDto(BaseDto):
    name: str
    status: ClaimStatus
    detail: str


class LgExampleReportDto(BaseDto):
    r: int
    k_label: str
    n: int
    passed: bool
    claims: list[ExampleClaimDto] = pyd.Field(default_factory=list)


@dataclass(frozen=True)
class LgExampleReport:
    instance: LgExampleInstance
    claims: tuple[ExampleClaim, ...]

    @property
    def passed(self) -> bool:
        """No claim fails; unverified claims do not count against the report."""
        return not self.failed

    @property
    def failed(self) -> list[ExampleClaim]:
        return [c for c in self.claims if c.status == ClaimStatus.Failed]

    @property
    def unverified(self) -> list[ExampleClaim]:
        return [c for c in self.claims if c.status == ClaimStatus.Unverified]

    def claim(self, name: str) -> ExampleClaim:
        return next(c for c in self.claims if c.name == name)

    def to_dto(self) -> LgExampleReportDto:
        return LgExampleReportDto(
            r=self.instance.r,
            k_label=self.instance.k_label,
            n=self.instance.n,
            passed=self.passed,
            claims=[ExampleClaimDto(name=c.name, status=c.status, detail=c.detail) for c in self.claims],
        )


def build_lg_example(r: int = 5, k_label: str = DEFAULT_K_LABEL) -> LgExampleInstance:
    """
    Build the factor-level data of the example.

    :raise ConstructionError: if `r` is not 5 or 7, or `k_label` does not name a nonabelian simple group of
        known order.
    """
    if r not in SUPPORTED_PRIMES:
        raise ConstructionError(f"The example is built for r in {sorted(SUPPORTED_PRIMES)}, got {r}")
    n = order_of_label(k_label)
    if n is None or k_label.startswith("C"):
        raise ConstructionError(f"{k_label!r} is not a known nonabelian simple group")
    factor, frobenius = build_psl2(r)
    LOGGER.debug("Example with J = PSL(2,%d), K = %s of order %d", 2**r, k_label, n)
    return LgExampleInstance(r=r, factor=factor, automorphism=frobenius, k_label=k_label, n=n)


def _centralizer_claim(fixed: PermGroup) -> ExampleClaim:
    labels = ", ".join(f"{label}^{count}" for label, count in sorted(composition_factors(fixed).items()))
    return ExampleClaim(
        "centralizer-solvable",
        _status(fixed.is_solvable),
        f"C_J(a1) has order {fixed.order} with composition factors {labels or '1'}",
    )


def _coprime_claim(inst: LgExampleInstance) -> ExampleClaim:
    j_gcd = math.gcd(inst.r, inst.factor.order)
    return ExampleClaim(
        "coprime",
        _status(j_gcd == 1),
        f"gcd({inst.r}, |J| = {inst.factor.order}) = {j_gcd}, gcd({inst.r}, |K|) = {math.gcd(inst.r, inst.n)}",
    )


def _formula_claim(inst: LgExampleInstance, fixed: PermGroup) -> ExampleClaim:
    formula = f"C_G(a) = (C_J1(a1) x ... x C_Jn(an))K of order {fixed.order}^{inst.n} * {inst.n}"
    if inst.factor.degree * inst.r > SAMPLE_DEGREE_LIMIT:
        return ExampleClaim(
            "fixed-point-formula",
            ClaimStatus.Unverified,
            f"{formula}; the J^{inst.r} sample of degree {inst.factor.degree * inst.r} is not built",
        )
    sample = build_power_action(inst.factor, const.PowerPattern.Mixed, prime=inst.r, automorphism=inst.automorphism)
    shift, diagonal = sample.actors.generators
    sample_fixed = fixed_points(sample, PermGroup(sample.actors.degree, [diagonal]))
    passed = sample_fixed.order == fixed.order**inst.r and shift * diagonal == diagonal * shift
    return ExampleClaim(
        "fixed-point-formula",
        _status(passed),
        f"{formula}; sampled on J^{inst.r} with a regular C{inst.r}: |C(a)| = {sample_fixed.order}",
    )


def faithful_orbit_model(group: PermGroup) -> PermGroup:
    """`group` restricted to its smallest orbit with a faithful action, or `group` itself if there is none."""
    for orbit in sorted(group.orbits(), key=len):
        if len(orbit) < 2:
            continue
        position = {point: i for i, point in enumerate(orbit)}
        restricted = PermGroup(
            len(orbit), [Permutation([position[g.array_form[x]] for x in orbit]) for g in group.generators]
        )
        if restricted.order == group.order:
            return restricted
    return group


def _block_permutation(structure: PowerStructure, k: Permutation) -> Permutation:
    """Move the `i`-th block of points onto the `k(i)`-th one, keeping positions inside blocks."""
    n = structure.factor_degree
    return Permutation([k.array_form[i] * n + x for i in range(structure.copies) for x in range(n)])


def wreath_model(factor: PermGroup) -> tuple[PermGroup, PermGroup, PowerStructure]:
    """
    `factor^5 ⋊ A5` with `A5` permuting the copies, the shape of the example with a small `K`.

    Returns the model, its subgroup `K` and the power structure of its base.
    """
    structure = PowerStructure(factor, MODEL_COPIES)
    k_group = PermGroup(
        structure.degree, [_block_permutation(structure, k) for k in alternating(MODEL_COPIES).generators]
    )
    return structure.power().join(k_group), k_group, structure


def _fixed_component_claim(fixed: PermGroup) -> ExampleClaim:
    model, k_group, _ = wreath_model(faithful_orbit_model(fixed))
    members = comp_p(model, SOLVABLE).members
    holding = [c for c in members if k_group.is_subgroup_of(c)]
    return ExampleClaim(
        "k-in-fixed-component",
        _status(len(holding) == 1),
        f"a acts trivially on C_G(a), so its (A,sol)-components are its sol-components; on the model "
        f"C_J(a1) wr A5 of degree {model.degree} there are {len(members)}, {len(holding)} containing K",
    )


def _components_claim(inst: LgExampleInstance) -> ExampleClaim:
    simple = is_simple(inst.factor)
    normal = normalizes(inst.automorphism, inst.factor)
    small_factor, small_frobenius = build_psl2(MODEL_EXTENSION_DEGREE)
    model, k_group, structure = wreath_model(small_factor)
    diagonal = identity(structure.degree)
    for i in range(structure.copies):
        diagonal = diagonal * structure.embed(i, small_frobenius)
    # the Frobenius of GF(2^k) has order k
    action = GroupAction.from_parts(model, PermGroup(structure.degree, [diagonal]), MODEL_EXTENSION_DEGREE)
    members = comp_ap(action, model, SOLVABLE).members
    factors = [structure.coordinate_group(i) for i in range(structure.copies)]
    exact = len(members) == len(factors) and all(any(m == f for f in factors) for m in members)
    avoided = not any(k_group.is_subgroup_of(m) for m in members)
    return ExampleClaim(
        "components-avoid-k",
        _status(simple and normal and exact and avoided),
        f"J simple: {simple}, a1 normalizes J: {normal}; on the model PSL(2,{2**MODEL_EXTENSION_DEGREE}) wr A5 "
        f"the {len(members)} (A,sol)-components are the coordinate factors: {exact}, none contains K: {avoided}",
    )


def verify_lg_example(inst: LgExampleInstance) -> LgExampleReport:
    """Check the five claims of the example, each reported separately."""
    fixed = centralizer(inst.factor, inst.automorphism)
    claims = (
        _centralizer_claim(fixed),
        _coprime_claim(inst),
        _formula_claim(inst, fixed),
        _fixed_component_claim(fixed),
        _components_claim(inst),
    )
    for claim in claims:
        if claim.status == ClaimStatus.Failed:
            LOGGER.error("Example claim %s fails: %s", claim.name, claim.detail)
        elif claim.status == ClaimStatus.Unverified:
            LOGGER.info("Example claim %s is not computed: %s", claim.name, claim.detail)
    return LgExampleReport(inst, claims)
