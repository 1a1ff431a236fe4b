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
import logging
from typing import Iterator, TypeVar

import sympy
from sympy.core import random as sympy_random

LOGGER = logging.getLogger(__name__)

T = TypeVar("T")


def none_throws(optional: T | None, message: str = "Unexpected `None`") -> T:
    """Convert an optional to its value. Raises an `AssertionError` if the value is `None`."""
    if optional is None:
        raise AssertionError(message)
    return optional


def prime_divisors(n: int) -> list[int]:
    """Return the sorted list of primes dividing `n`."""
    if n <= 1:
        return []
    return [int(p) for p in sympy.primefactors(n)]


def factor_multiset(n: int) -> dict[int, int]:
    """Return the prime factorization of `n` as a prime to exponent mapping."""
    if n <= 1:
        return {}
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}


def prime_part(n: int, p: int) -> int:
    """Return the largest power of `p` dividing `n`."""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_power_of(n: int, p: int) -> bool:
    """Return `True` if `n` is a (possibly trivial) power of `p`."""
    return prime_part(n, p) == n


def is_prime(n: int) -> bool:
    """Return `True` if `n` is a prime number."""
    return bool(sympy.isprime(n))


def seed_random(seed: int) -> None:
    """Seed the generator behind sympy's randomized group algorithms and our own probes."""
    LOGGER.debug("Seeding random generator with %d", seed)
    sympy_random.seed(seed)


def random_index(n: int) -> int:
    """Return a seeded random integer in `[0, n)`."""
    return sympy_random.randrange(n)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
