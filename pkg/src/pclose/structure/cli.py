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

from pclose.output import add_out_argument, emit_dto
from pclose.perm.text_format import read_group_spec
from pclose.structure.report import analyze


class AnalyzeCliExtension(CliExtension):
    COMMAND_NAME = "analyze"
    COMMAND_DESCRIPTION = "Prints the structure report of a group: radicals, components, composition factors"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument("spec", metavar="spec", type=str, help="Group-spec file")
        add_out_argument(parser)

    def handle(self, args: argparse.Namespace):
        group = read_group_spec(args.spec)
        CLI.print_info(f"Analyzing a group of degree {group.degree} and order {group.order}")
        emit_dto(analyze(group).to_dto(), args.out)
