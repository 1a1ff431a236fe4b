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
from unittest import TestCase

from pclose.errors import ConstructionError
from pclose.perm.text_format import format_group_spec, parse_group_spec


class GroupSpecTestCase(TestCase):
    def test_parse(self):
        text = """
        # A5 on five points
        degree 5
        (1 2 3 4 5)
        (3 4 5)
        """
        group = parse_group_spec(text)
        self.assertEqual(5, group.degree)
        self.assertEqual(60, group.order)

    def test_format(self):
        group = parse_group_spec("degree 4\n( 1 2 )( 3 4 )\n(1 3)(2 4)\n")
        self.assertEqual("degree 4\n(1 2)(3 4)\n(1 3)(2 4)\n", format_group_spec(group))

    def test_trivial_group(self):
        self.assertEqual(1, parse_group_spec("degree 3").order)

    def test_errors(self):
        for text in ("", "deg 3\n(1 2)", "degree 3\n(1 4)", "degree 0"):
            with self.subTest(text=text):
                with self.assertRaises(ConstructionError):
                    parse_group_spec(text)
