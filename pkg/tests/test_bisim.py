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
Test cases for bisimulations and simulations
"""
from unittest import TestCase

from freedl.bisim import (
    alco_bisim,
    alcouiota_bisim,
    alcouiota_relation,
    elou_simulates,
    elou_simulation,
    has_twin,
)
from freedl.goldens import load_interpretation
from freedl.semantics import PartialInterpretation
from freedl.syntax import Signature

SIGMA_A = Signature(concepts=frozenset({"A"}))
SIGMA_AR = Signature(concepts=frozenset({"A", "B"}), roles=frozenset({"r"}))


def interpretation(domain, concepts=None, roles=None, individuals=None):
    """Builds a small interpretation from lists"""
    return PartialInterpretation.from_dict(
        {"domain": domain, "concepts": concepts or {}, "roles": roles or {}, "individuals": individuals or {}}
    )


######################################################################
#  A L C O   B I S I M U L A T I O N   T E S T   C A S E S
######################################################################
class TestAlcoBisimulation(TestCase):
    """The greatest ALCO(Σ) bisimulation"""

    def test_atoms_must_agree(self):
        """It should only relate elements with the same Σ names"""
        left = interpretation(["d1", "d2"], {"A": ["d1"]})
        right = interpretation(["e1"], {"A": ["e1"]})
        self.assertEqual(alco_bisim(left, right, SIGMA_A), frozenset({("d1", "e1")}))

    def test_forth_and_back(self):
        """It should drop pairs whose successors cannot be matched"""
        left = interpretation(["d1", "d2"], {"B": ["d2"]}, {"r": [["d1", "d2"]]})
        right = interpretation(["e1", "e2"], {}, {"r": [["e1", "e2"]]})
        relation = alco_bisim(left, right, SIGMA_AR)
        self.assertNotIn(("d1", "e1"), relation)
        self.assertNotIn(("d2", "e2"), relation)

    def test_individuals_are_atoms(self):
        """It should separate the value of a Σ individual from other elements"""
        left = interpretation(["d1", "d2"], individuals={"a": "d1"})
        sigma = Signature(individuals=frozenset({"a"}))
        self.assertEqual(alco_bisim(left, left, sigma), frozenset({("d1", "d1"), ("d2", "d2")}))
        self.assertEqual(has_twin(left, sigma), set())

    def test_twins(self):
        """It should find elements bisimilar to another element"""
        interp = interpretation(["d1", "d2", "d3"], {"A": ["d1", "d2"]})
        self.assertEqual(has_twin(interp, SIGMA_A), {"d1", "d2"})


######################################################################
#  A L C O U ι   B I S I M U L A T I O N   T E S T   C A S E S
######################################################################
class TestAlcouiotaBisimulation(TestCase):
    """Total bisimulations that respect twins"""

    def test_counting_two_and_three(self):
        """It should relate two and three A elements with the full relation"""
        left = load_interpretation("two_three_a_i.interp.json")
        right = load_interpretation("two_three_a_j.interp.json")
        full = {(d, e) for d in left.domain for e in right.domain}
        self.assertEqual(set(alcouiota_relation(left, right, SIGMA_A)), full)

    def test_one_and_two(self):
        """It should separate a unique A element from one with a twin"""
        left = interpretation(["d"], {"A": ["d"]})
        right = interpretation(["e1", "e2"], {"A": ["e1", "e2"]})
        self.assertEqual(len(alco_bisim(left, right, SIGMA_A)), 2)
        self.assertFalse(alcouiota_bisim(left, "d", right, "e1", SIGMA_A))

    def test_totality(self):
        """It should require every element to be related"""
        left = interpretation(["d1", "d2"], {"A": ["d1"]})
        right = interpretation(["e1"], {"A": ["e1"]})
        self.assertIn(("d1", "e1"), alco_bisim(left, right, SIGMA_A))
        self.assertEqual(alcouiota_relation(left, right, SIGMA_A), frozenset())

    def test_implicit_definition_model(self):
        """It should find a and e bisimilar in the cycle model"""
        interp = load_interpretation("jiuntcons.interp.json")
        sigma = Signature(concepts=frozenset({"A"}), roles=frozenset({"r"}))
        self.assertTrue(alcouiota_bisim(interp, "a", interp, "e", sigma))


######################################################################
#  S I M U L A T I O N   T E S T   C A S E S
######################################################################
class TestSimulation(TestCase):
    """The greatest ELO(Σ) simulation, with or without u"""

    def test_forth_only(self):
        """It should keep a pair when the right side has more"""
        left = interpretation(["d1", "d2"], {"A": ["d1"]}, {"r": [["d1", "d2"]]})
        right = interpretation(["e1", "e2", "e3"], {"A": ["e1"], "B": ["e2"]}, {"r": [["e1", "e2"], ["e1", "e3"]]})
        self.assertTrue(elou_simulates(left, "d1", right, "e1", SIGMA_AR))
        self.assertFalse(elou_simulates(right, "e1", left, "d1", SIGMA_AR))

    def test_universal_role_needs_left_totality(self):
        """It should fail with u when some left element is not simulated"""
        left = interpretation(["d1", "d2"], {"A": ["d1"], "B": ["d2"]})
        right = interpretation(["e1"], {"A": ["e1"]})
        self.assertTrue(elou_simulates(left, "d1", right, "e1", SIGMA_AR, universal=False))
        self.assertFalse(elou_simulates(left, "d1", right, "e1", SIGMA_AR))
        self.assertEqual(elou_simulation(left, right, SIGMA_AR), frozenset())

    def test_named_points(self):
        """It should simulate b by b only when u is left out"""
        sigma = Signature(concepts=frozenset({"B"}), individuals=frozenset({"b"}))
        left = load_interpretation("eloiota_i.interp.json")
        right = load_interpretation("eloiota_j.interp.json")
        self.assertTrue(elou_simulates(left, "b", right, "b", sigma, universal=False))
        self.assertFalse(elou_simulates(left, "b", right, "b", sigma))
