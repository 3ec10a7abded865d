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
Test cases for the bounded model oracle
"""
from unittest import TestCase

from freedl.alcou_sat import alcouiota_sat
from freedl.common.errors import ResourceExceeded
from freedl.dual_domain import dd_sat, dd_satisfies
from freedl.oracle import count_interpretations, interpretations, oracle_dd_sat, oracle_entail, oracle_sat
from freedl.parser import parse_axiom, parse_ontology
from freedl.semantics import is_model, satisfies_axiom
from freedl.syntax import Signature
from .factories import OntologyFactory, reseed, suite_size

SIGMA = Signature(concepts=frozenset({"A"}), individuals=frozenset({"a"}))


######################################################################
#  E N U M E R A T I O N   T E S T   C A S E S
######################################################################
class TestEnumeration(TestCase):
    """Interpretations up to a domain bound"""

    def test_counts(self):
        """It should enumerate every interpretation of a single element domain"""
        self.assertEqual(count_interpretations(1, 1, 0, 1), 4)
        self.assertEqual(len(list(interpretations(SIGMA, 1))), 4)
        self.assertEqual(count_interpretations(1, 1, 0, 1, mode="total"), 2)

    def test_renaming_pruned(self):
        """It should skip renamings of the same labels"""
        sigma = Signature(concepts=frozenset({"A"}))
        self.assertEqual(len(list(interpretations(sigma, 2, prune=False))), count_interpretations(2, 1, 0, 0))
        self.assertEqual(len(list(interpretations(sigma, 2))), 5)

    def test_total_mode(self):
        """It should make every individual denote"""
        for interp in interpretations(SIGMA, 2, mode="total"):
            self.assertIn("a", interp.individuals)


######################################################################
#  O R A C L E   T E S T   C A S E S
######################################################################
class TestOracles(TestCase):
    """Bounded satisfiability and entailment"""

    def test_model_found(self):
        """It should return a model of a satisfiable ontology"""
        ontology = parse_ontology("A(a).\ntop sub some r.A.\n")
        model = oracle_sat(ontology, 2)
        self.assertIsNotNone(model)
        self.assertTrue(is_model(model, ontology))

    def test_no_model(self):
        """It should return None when no small model exists"""
        self.assertIsNone(oracle_sat(parse_ontology("top sub some r.A.\nA sub not A.\n"), 3))

    def test_modes(self):
        """It should let individuals fail to denote only in partial mode"""
        ontology = parse_ontology("{a} sub bot.")
        self.assertIsNotNone(oracle_sat(ontology, 1))
        self.assertIsNone(oracle_sat(ontology, 2, mode="total"))

    def test_budget(self):
        """It should stop when the budget is spent"""
        ontology = parse_ontology("{a} sub A.\n{a} sub not A.\ntop sub some u.{a}.\n")
        self.assertRaises(ResourceExceeded, oracle_sat, ontology, 2, budget=2)

    def test_entailment(self):
        """It should find countermodels of non-consequences only"""
        ontology = parse_ontology("A sub B.\nB sub C.\n")
        self.assertIsNone(oracle_entail(ontology, parse_axiom("A sub C"), 2))
        countermodel = oracle_entail(ontology, parse_axiom("C sub A"), 2)
        self.assertIsNotNone(countermodel)
        self.assertFalse(satisfies_axiom(countermodel, parse_axiom("C sub A")))

    def test_models_imply_satisfiability(self):
        """It should only find models of ontologies type elimination calls satisfiable"""
        reseed()
        for _ in range(suite_size(20, 200)):
            ontology = OntologyFactory(iota=True)
            model = oracle_sat(ontology, 2)
            if model is not None:
                self.assertTrue(is_model(model, ontology), str(ontology))
                self.assertTrue(alcouiota_sat(ontology), str(ontology))


######################################################################
#  D U A L - D O M A I N   O R A C L E   T E S T   C A S E S
######################################################################
class TestDualDomainOracle(TestCase):
    """Bounded dual-domain satisfiability"""

    def test_polarities(self):
        """It should satisfy not a = a only under negative semantics"""
        formula = parse_ontology("not [a = a].")
        self.assertIsNone(oracle_dd_sat(formula, "+", 2))
        model = oracle_dd_sat(formula, "-", 2)
        self.assertIsNotNone(model)
        self.assertTrue(dd_satisfies(model, formula, "-"))

    def test_models_imply_satisfiability(self):
        """It should only find models of formulas the translation calls satisfiable"""
        for text in ("A(a).\nnot [etop(a)].\n", "not [etop(iota A)].\n", "A(a).\nnot [a = iota A].\n"):
            formula = parse_ontology(text)
            for polarity in ("+", "-"):
                if oracle_dd_sat(formula, polarity, 2) is not None:
                    self.assertTrue(dd_sat(formula, polarity), f"{text} {polarity}")
