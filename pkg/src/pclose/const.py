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
from enum import StrEnum
from typing import Final

DEFAULT_ORACLE_BOUND: Final[int] = 2000
DEFAULT_QUOTIENT_DEGREE_CAP: Final[int] = 20000
DEFAULT_EXHAUSTIVE_ORDER_LIMIT: Final[int] = 100000
DEFAULT_PROBE_COUNT: Final[int] = 32
# Largest order for which intersections are computed by filtering the smaller group's elements.
ELEMENT_FILTER_LIMIT: Final[int] = 50000
# Random element draws used to tell A8 from L3(4).
ORDER_15_SEARCH_BOUND: Final[int] = 512
REPORT_SCHEMA_VERSION: Final[int] = 1


class SeriesKind(StrEnum):
    """Kinds of subgroup series."""

    Derived = "derived"
    LowerCentral = "lower_central"
    PerfectCore = "perfect_core"


class StabilizerMode(StrEnum):
    """Which group the members of an invariant-subgroup family must be normalized by."""

    ACGA = "ACGA"
    ACGa = "ACGa"
    NoFilter = "none"


class FunctorMode(StrEnum):
    """Derived-functor flavours."""

    P = "P"
    NearP = "nP"


class PowerPattern(StrEnum):
    """Ways an elementary abelian group acts on a direct power J^m."""

    RegularWreath = "regular_wreath"
    Diagonal = "diagonal"
    Coordinatewise = "coordinatewise"
    Mixed = "mixed"


class CorpusTier(StrEnum):
    """Corpus tiers."""

    Small = "small"
    Structured = "structured"
    Large = "large"


class PropertyAxiom(StrEnum):
    """Closure axioms a property may declare."""

    SubgroupClosed = "subgroup_closed"
    QuotientClosed = "quotient_closed"
    IntersectionQuotient = "intersection_quotient"
    NormalProduct = "normal_product"
    ExtensionClosed = "extension_closed"
    ContainsSolvable = "contains_solvable"


class FindingKind(StrEnum):
    """Kinds of suite findings."""

    TheoremViolation = "theorem-violation"
    InternalError = "internal-error"


class ViolationKind(StrEnum):
    """Kinds of signalizer functor axiom violations."""

    Containment = "containment"
    Invariance = "invariance"
    Order = "order"
    Balance = "balance"


class FixedPointStatus(StrEnum):
    """How the restriction "coprime action with fixed points in P forces solvability" is treated."""

    Accepted = "accepted"
    CorpusTested = "corpus-tested"
