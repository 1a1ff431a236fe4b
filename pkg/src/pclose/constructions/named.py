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
"""Named seed groups used by tests and the corpus."""
import itertools
from typing import Sequence

from sympy.combinatorics import Permutation
from sympy.combinatorics import named_groups

from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles, shift

Matrix = tuple[tuple[int, ...], ...]


def symmetric(n: int) -> PermGroup:
    return PermGroup.from_sympy(named_groups.SymmetricGroup(n), n)


def alternating(n: int) -> PermGroup:
    return PermGroup.from_sympy(named_groups.AlternatingGroup(n), n)


def cyclic(n: int) -> PermGroup:
    return PermGroup.from_sympy(named_groups.CyclicGroup(n), n)


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order `2n` acting on the `n` vertices of a polygon."""
    if n < 3:
        raise ConstructionError("Dihedral groups on fewer than 3 points are not polygon symmetries")
    return PermGroup.from_sympy(named_groups.DihedralGroup(n), n)


def klein_four() -> PermGroup:
    """The normal Klein four-group of S4."""
    return PermGroup(4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])


def from_cycles(degree: int, *generators: str) -> PermGroup:
    return PermGroup(degree, [parse_cycles(g, degree) for g in generators])


def direct_product(*groups: PermGroup) -> PermGroup:
    """External direct product acting on the disjoint union of the point sets."""
    degree = sum(g.degree for g in groups)
    gens: list[Permutation] = []
    offset = 0
    for g in groups:
        gens.extend(shift(x, offset, degree) for x in g.generators)
        offset += g.degree
    return PermGroup(degree, gens)


def factor_embedding(groups: Sequence[PermGroup], position: int) -> PermGroup:
    """The `position`-th factor of `direct_product(*groups)` as a subgroup."""
    degree = sum(g.degree for g in groups)
    offset = sum(g.degree for g in groups[:position])
    return PermGroup(degree, [shift(x, offset, degree) for x in groups[position].generators])


def vectors(p: int, dim: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of F_p^dim in lexicographic order."""
    return [v for v in itertools.product(range(p), repeat=dim) if any(v)]


def matrix_permutation(matrix: Matrix, p: int, points: Sequence[tuple[int, ...]]) -> Permutation:
    """Permutation induced on row vectors by `v ↦ v·matrix` over F_p."""
    index = {v: i for i, v in enumerate(points)}
    dim = len(matrix)
    images = []
    for v in points:
        image = tuple(sum(v[i] * matrix[i][j] for i in range(dim)) % p for j in range(dim))
        if image not in index:
            raise ConstructionError(f"Matrix {matrix} does not preserve the point set")
        images.append(index[image])
    return Permutation(images)


def matrix_group(matrices: Sequence[Matrix], p: int, *, include_zero: bool = False) -> PermGroup:
    """Matrix group over F_p acting on (nonzero) row vectors."""
    dim = len(matrices[0])
    points = list(itertools.product(range(p), repeat=dim)) if include_zero else vectors(p, dim)
    return PermGroup(len(points), [matrix_permutation(m, p, points) for m in matrices])


SL2_UPPER: Matrix = ((1, 1), (0, 1))
SL2_LOWER: Matrix = ((1, 0), (1, 1))


def special_linear_2(p: int) -> PermGroup:
    """SL(2, p) acting on the `p² - 1` nonzero vectors of F_p²."""
    return matrix_group([SL2_UPPER, SL2_LOWER], p)


def quaternion() -> PermGroup:
    """Q8 inside SL(2, 3), regular on the 8 nonzero vectors of F_3²."""
    return matrix_group([((0, 1), (2, 0)), ((1, 1), (1, 2))], 3)


def extraspecial_27() -> PermGroup:
    """The Heisenberg group 3^{1+2} of exponent 3, acting on F_3³."""
    return matrix_group([((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 1), (0, 0, 1))], 3, include_zero=True)


def frobenius_21() -> PermGroup:
    """C7 ⋊ C3 acting on the integers modulo 7."""
    return from_cycles(7, "(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)")
