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
import argparse
from typing import Callable, Final

from cli_rack import CLI
from cli_rack.modular import CliExtension

from pclose.closures.action import GroupAction
from pclose.closures.invariant import o_np_invariant, o_np_normal, o_p_invariant
from pclose.closures.text_format import read_action_spec
from pclose.dto import BaseDto, GroupDto
from pclose.output import add_out_argument, emit_dto
from pclose.perm.group import PermGroup
from pclose.perm.text_format import read_group_spec
from pclose.properties.closure import o_p, o_upper_p
from pclose.properties.extended import o_pe
from pclose.properties.property import Property
from pclose.properties.registry import get_property

GROUP_CLOSURES: Final[dict[str, Callable[[PermGroup, Property], PermGroup]]] = {
    "radical": o_p,
    "residual": o_upper_p,
    "extended": o_pe,
}
ACTION_CLOSURES: Final[dict[str, Callable[[GroupAction, Property], PermGroup]]] = {
    "invariant": o_p_invariant,
    "near": o_np_invariant,
    "near-normal": o_np_normal,
}


class ClosureDto(BaseDto):
    kind: str
    property: str
    ambient: GroupDto
    closure: GroupDto


class ClosureCliExtension(CliExtension):
    COMMAND_NAME = "closure"
    COMMAND_DESCRIPTION = "Computes O_P, O^P, O_{P,E} of a group, or the invariant and near closures of an action"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "spec",
            metavar="spec",
            type=str,
            help="Group-spec file, or action-spec file for the invariant and near kinds",
        )
        parser.add_argument(
            "--kind",
            "-k",
            dest="kind",
            type=str,
            required=False,
            default="radical",
            choices=list(GROUP_CLOSURES) + list(ACTION_CLOSURES),
            help="radical: O_P(G), residual: O^P(G), extended: O_{P,E}(G), invariant: O_P(G;A), "
            "near: O_nP(G;A), near-normal: the largest invariant normal near subgroup",
        )
        parser.add_argument(
            "--property",
            "-p",
            dest="property",
            type=str,
            required=False,
            default="solvable",
            help="trivial, nilpotent, solvable, odd-order or pi:<primes>",
        )
        add_out_argument(parser)

    def handle(self, args: argparse.Namespace):
        prop = get_property(args.property)
        if args.kind in ACTION_CLOSURES:
            action = read_action_spec(args.spec)
            ambient = action.group
            result = ACTION_CLOSURES[args.kind](action, prop)
        else:
            ambient = read_group_spec(args.spec)
            result = GROUP_CLOSURES[args.kind](ambient, prop)
        CLI.print_info(f"{args.kind} closure for {prop.name}: order {result.order} of {ambient.order}")
        dto = ClosureDto(
            kind=args.kind,
            property=prop.name,
            ambient=GroupDto.from_group(ambient),
            closure=GroupDto.from_group(result),
        )
        emit_dto(dto, args.out)
