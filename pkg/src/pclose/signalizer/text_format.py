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
Functor-spec text format: an action spec followed by one line per cyclic subgroup of the actors::

    theta e1 : (4 5 6), (7 8 9)
    theta e1*e2 : centralizer
    theta e2*e3 :

The word names a generator of the cyclic subgroup in the actor generators `e1, e2, ...`. The value is a
comma-separated list of generators in cycle notation, empty for the trivial group, or the keyword
`centralizer` for `C_G(a)`.
"""
from pathlib import Path
import re
from typing import Final

from pclose.closures.action import CoprimeAction
from pclose.closures.fixed import fixed_points_of
from pclose.closures.text_format import action_from_lines, format_action_spec
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles
from pclose.perm.text_format import significant_lines
from pclose.signalizer.functor import SignalizerFunctor

_THETA_LINE: Final[re.Pattern] = re.compile(r"^theta\s+(\S+)\s*:\s*(.*)$")
_TOP_LEVEL_COMMA: Final[re.Pattern] = re.compile(r",(?![^()]*\))")
CENTRALIZER_KEYWORD: Final[str] = "centralizer"


def parse_functor_spec(text: str) -> SignalizerFunctor:
    """
    Parse a functor spec.

    :raise ConstructionError: if the action spec is malformed, a theta line is malformed or a cyclic subgroup
        has no value.
    """
    lines = significant_lines(text)
    theta_lines = [line for line in lines if line.startswith("theta")]
    action = action_from_lines([line for line in lines if not line.startswith("theta")])
    if not isinstance(action, CoprimeAction):
        raise ConstructionError("Functors need a coprime action")
    frame = action.frame
    degree = action.group.degree
    values: dict[tuple[int, ...], PermGroup] = {}
    centralizing = []
    for line in theta_lines:
        match = _THETA_LINE.match(line)
        if match is None:
            raise ConstructionError(f"Malformed theta line: {line!r}")
        coords = frame.parse_word(match.group(1))
        if not any(coords):
            raise ConstructionError(f"The identity has no functor value: {line!r}")
        body = match.group(2).strip()
        if body == CENTRALIZER_KEYWORD:
            values[coords] = fixed_points_of(action, frame.element(coords))
            centralizing.append(coords)
        else:
            generators = [part.strip() for part in _TOP_LEVEL_COMMA.split(body) if part.strip()]
            values[coords] = PermGroup(degree, [parse_cycles(g, degree) for g in generators])
    return SignalizerFunctor(action, values, centralizing=centralizing)


def read_functor_spec(path: Path | str) -> SignalizerFunctor:
    return parse_functor_spec(Path(path).read_text(encoding="utf-8"))


def format_functor_spec(functor: SignalizerFunctor) -> str:
    """Render a functor with explicit generators for every value."""
    lines = [format_action_spec(functor.action).rstrip("\n")]
    for coords, value in functor.items():
        lines.append(f"theta {functor.word(coords)} : " + ", ".join(value.cycle_generators()))
    return "\n".join(line.rstrip() for line in lines) + "\n"
