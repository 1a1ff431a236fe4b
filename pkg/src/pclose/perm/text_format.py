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
Group-spec text format.

The first significant line is `degree N`; each following line holds one generator in 1-based disjoint-cycle
notation, e.g. `(1 2 3)(4 5)`. Blank lines and `#` comments are ignored.
"""
from pathlib import Path
import re
from typing import Final, Iterable, Sequence

from sympy.combinatorics import Permutation

from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import format_cycles, parse_cycles

_DEGREE_LINE: Final[re.Pattern] = re.compile(r"^degree\s+(\d+)$")


def significant_lines(text: str) -> list[str]:
    """Strip comments and blank lines."""
    result = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            result.append(stripped)
    return result


def parse_degree_line(line: str) -> int:
    match = _DEGREE_LINE.match(line.strip())
    if match is None:
        raise ConstructionError(f"Expected `degree N`, got {line!r}")
    degree = int(match.group(1))
    if degree < 1:
        raise ConstructionError("Degree must be positive.")
    return degree


def parse_generators(lines: Sequence[str]) -> tuple[int, list[Permutation]]:
    """Parse a degree line followed by generator lines, keeping the generators in file order."""
    if not lines:
        raise ConstructionError("Empty group spec.")
    degree = parse_degree_line(lines[0])
    return degree, [parse_cycles(line, degree) for line in lines[1:]]


def parse_group_spec(text: str) -> PermGroup:
    degree, generators = parse_generators(significant_lines(text))
    return PermGroup(degree, generators)


def read_group_spec(path: Path | str) -> PermGroup:
    return parse_group_spec(Path(path).read_text(encoding="utf-8"))


def format_generators(degree: int, generators: Iterable[Permutation]) -> str:
    lines = [f"degree {degree}"]
    lines.extend(format_cycles(g) for g in generators)
    return "\n".join(lines) + "\n"


def format_group_spec(group: PermGroup) -> str:
    """Render a group in group-spec format."""
    return format_generators(group.degree, group.generators)
