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
"""Composition factors, as a multiset of labels."""
from collections import Counter
import logging

from pclose.perm.group import PermGroup
from pclose.perm.quotient import quotient
from pclose.structure.layer import join_all, minimal_normal_subgroups, simple_factors
from pclose.structure.radical import solvable_radical
from pclose.structure.simple_groups import identify_simple
from pclose.utils import factor_multiset

LOGGER = logging.getLogger(__name__)

UNKNOWN_PREFIX = "?"


def composition_factors(group: PermGroup) -> Counter[str]:
    """
    Return the composition factors as labels: `Cp` for cyclic factors, a simple-group label otherwise.

    The solvable radical contributes its prime factorization; the socle of `G/Sol(G)` contributes its
    simple factors and the procedure recurses on the quotient by the socle. Unidentified factors are
    labelled `?<order>`.
    """
    labels: Counter[str] = Counter()
    current = group
    while not current.is_trivial:
        radical = solvable_radical(current)
        for p, e in factor_multiset(radical.order).items():
            labels[f"C{p}"] += e
        if radical.order == current.order:
            break
        target, _ = quotient(current, radical)
        minimals = minimal_normal_subgroups(target)
        for minimal in minimals:
            for factor in simple_factors(target, minimal):
                label = identify_simple(factor)
                labels[label if label is not None else f"{UNKNOWN_PREFIX}{factor.order}"] += 1
        socle = join_all(minimals, target.degree)
        current, _ = quotient(target, socle)
    return labels


def is_kgroup(labels: Counter[str]) -> bool:
    """`True` when every composition factor is identified."""
    return not any(label.startswith(UNKNOWN_PREFIX) for label in labels)
