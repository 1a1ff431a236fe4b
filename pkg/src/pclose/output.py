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
"""Where the commands put their results: standard output, or a file when `--out` is given."""
import argparse
from pathlib import Path

from cli_rack import CLI
from cli_rack.utils import ensure_dir

from pclose.dto import BaseDto


def write_text(path: Path | str, text: str) -> None:
    path = Path(path)
    ensure_dir(str(path.parent.absolute()))
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def dto_json(dto: BaseDto) -> str:
    return dto.json(indent=2, exclude_none=True) + "\n"


def emit(text: str, out: str | None) -> None:
    if out is None:
        CLI.print_data(text.rstrip("\n"))
    else:
        write_text(out, text)
        CLI.print_info(f"Written to {out}")


def emit_dto(dto: BaseDto, out: str | None) -> None:
    emit(dto_json(dto), out)


def add_out_argument(parser: argparse.ArgumentParser, what: str = "the JSON report") -> None:
    parser.add_argument(
        "--out",
        "-o",
        dest="out",
        type=str,
        required=False,
        default=None,
        help=f"Write {what} to this file instead of standard output",
    )
