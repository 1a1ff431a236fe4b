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

from cli_rack import CLI
from cli_rack.modular import CliExtension

from pclose.closures.text_format import read_action_spec
from pclose.components.acomp import comp_ap
from pclose.components.pcomp import comp_p
from pclose.output import add_out_argument, emit_dto
from pclose.perm.text_format import read_group_spec
from pclose.properties.registry import get_property


class ComponentsCliExtension(CliExtension):
    COMMAND_NAME = "components"
    COMMAND_DESCRIPTION = "Prints the P-components of a group, or the A-P-components under an action"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument("spec", metavar="spec", type=str, nargs="?", default=None, help="Group-spec file")
        parser.add_argument(
            "--action",
            "-a",
            dest="action",
            type=str,
            required=False,
            default=None,
            help="Action-spec file. Components of the acted-on group are taken up to the actors.",
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
        if args.action is not None:
            action = read_action_spec(args.action, coprime=False)
            result = comp_ap(action, action.group, prop)
        elif args.spec is not None:
            result = comp_p(read_group_spec(args.spec), prop)
        else:
            CLI.fail("Either a group spec or --action is required", 2)
            return
        CLI.print_info(f"{len(result.members)} {prop.name}-components")
        emit_dto(result.to_dto(), args.out)
