######################################################################
# Copyright 2025 The freedl Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
######################################################################

"""
Test cases for the worked examples
"""
from unittest import TestCase
from unittest.mock import patch

from freedl.common.errors import ResourceExceeded
from freedl.goldens import GOLDENS, Golden, load_ontology, run_goldens, sigma_for


def _exhausted() -> bool:
    raise ResourceExceeded("budget")


######################################################################
#  G O L D E N   T E S T   C A S E S
######################################################################
class TestGoldens(TestCase):
    """Every worked example gives its expected verdict"""

    def test_all_goldens_pass(self):
        """It should reproduce every expected verdict"""
        for result in run_goldens():
            with self.subTest(golden=result.name):
                self.assertTrue(result.passed, result.to_dict())

    def test_named_goldens(self):
        """It should run only the named goldens, in order"""
        results = run_goldens(["jiuntcons-bisim", "two-three-bisim"])
        self.assertEqual([r.name for r in results], ["jiuntcons-bisim", "two-three-bisim"])
        self.assertEqual(run_goldens(["no-such-golden"]), [])

    def test_names_are_unique(self):
        """It should register each golden once"""
        names = [item.name for item in GOLDENS]
        self.assertEqual(len(names), len(set(names)))

    def test_result_document(self):
        """It should serialize a result"""
        document = run_goldens(["two-three-bisim"])[0].to_dict()
        self.assertEqual(set(document), {"name", "expected", "actual", "passed", "seconds", "error"})
        self.assertTrue(document["passed"])

    def test_reasoner_error_fails_golden(self):
        """It should record a reasoner error as a failed golden"""
        with patch("freedl.goldens.GOLDENS", [Golden("exhausted", "runs out", _exhausted, True)]):
            result = run_goldens()[0]
        self.assertFalse(result.passed)
        self.assertIsNone(result.actual)
        self.assertIn("ResourceExceeded", result.error)

    def test_sigma_listing(self):
        """It should resolve role names against the ontology"""
        ontology = load_ontology("kr.onto")
        sigma = sigma_for(ontology, "KRConf,hasLoc,VirtualLoc")
        self.assertEqual(sigma.roles, frozenset({"hasLoc"}))
        self.assertEqual(sigma.concepts, frozenset({"KRConf", "VirtualLoc"}))
