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
"""Binary fields `GF(2^k)` with fixed defining polynomials."""
import functools
import logging
from typing import Final

import galois
import numpy as np

from pclose.errors import ConstructionError

LOGGER = logging.getLogger(__name__)

MAX_EXTENSION_DEGREE: Final[int] = 8

IRREDUCIBLE_POLYNOMIALS: Final[dict[int, str]] = {
    2: "x^2 + x + 1",
    3: "x^3 + x + 1",
    4: "x^4 + x + 1",
    5: "x^5 + x^2 + 1",
    6: "x^6 + x^4 + x^3 + x + 1",
    7: "x^7 + x + 1",
    8: "x^8 + x^4 + x^3 + x^2 + 1",
}


class FiniteField:
    """
    The field with `2^k` elements, elements represented by the integers `0..2^k - 1` (polynomial bit-vectors).
    """

    def __init__(self, k: int) -> None:
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise ConstructionError(f"Extension degree {k} outside 1..{MAX_EXTENSION_DEGREE}")
        self.k = k
        self.order = 2**k
        if k == 1:
            self.gf: type[galois.FieldArray] = galois.GF(2)
        else:
            self.gf = galois.GF(self.order, irreducible_poly=IRREDUCIBLE_POLYNOMIALS[k])

    @property
    def elements(self) -> "galois.FieldArray":
        return self.gf.elements

    @property
    def primitive_element(self) -> int:
        return int(self.gf.primitive_element)

    def add(self, a: int, b: int) -> int:
        return int(self.gf(a) + self.gf(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.gf(a) * self.gf(b))

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.gf(a) ** -1)

    def frobenius(self, a: int) -> int:
        """The automorphism `x ↦ x²`."""
        return int(self.gf(a) ** 2)

    @staticmethod
    def to_ints(values: "galois.FieldArray") -> list[int]:
        return np.asarray(values.view(np.ndarray), dtype=np.int64).tolist()

    def __repr__(self) -> str:
        return f"FiniteField(2^{self.k})"


@functools.lru_cache(maxsize=None)
def binary_field(k: int) -> FiniteField:
    """Shared field instance for `GF(2^k)`."""
    return FiniteField(k)
