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
Test cases for the ELOuι completion engine
"""
from unittest import TestCase

from freedl.alcou_sat import alcouiota_entail
from freedl.common.errors import DialectError, ShapeError
from freedl.elo_engine import canonical_model, classify, elo_entail, elo_model, saturate
from freedl.normalize import elo_normal_form
from freedl.parser import parse_axiom, parse_ontology
from freedl.semantics import is_model
from freedl.syntax import CI, Bot, Name
from .factories import EloOntologyFactory, random_concept, reseed, suite_size


######################################################################
#  E N T A I L M E N T   T E S T   C A S E S
######################################################################
class TestEloEntailment(TestCase):
    """Subsumption by saturation"""

    def test_told_subsumption(self):
        """It should chain concept inclusions"""
        ontology = parse_ontology("A sub B.\nB sub C.\n")
        self.assertTrue(elo_entail(ontology, parse_axiom("A sub C")))
        self.assertFalse(elo_entail(ontology, parse_axiom("C sub A")))

    def test_existentials(self):
        """It should propagate through role successors"""
        ontology = parse_ontology("A sub some r.B.\nsome r.B sub C.\n")
        self.assertTrue(elo_entail(ontology, parse_axiom("A sub C")))
        self.assertTrue(elo_entail(ontology, parse_axiom("A sub some r.top")))
        self.assertFalse(elo_entail(ontology, parse_axiom("A sub some s.top")))

    def test_nominals(self):
        """It should share facts between elements named by the same individual"""
        ontology = parse_ontology("A sub {a}.\n{a} sub B.\n")
        self.assertTrue(elo_entail(ontology, parse_axiom("A sub B")))

    def test_definite_descriptions(self):
        """It should derive {ιA} once A has at most one element"""
        self.assertTrue(elo_entail(parse_ontology("A sub {a}."), parse_axiom("A sub {iota A}")))
        self.assertFalse(elo_entail(parse_ontology("top sub some u.A."), parse_axiom("A sub {iota A}")))

    def test_assertions(self):
        """It should decide assertions about denoting individuals"""
        ontology = parse_ontology("A(a).\nA sub B.\n")
        self.assertTrue(elo_entail(ontology, parse_axiom("B(a)")))
        self.assertFalse(elo_entail(ontology, parse_axiom("B(b)")))

    def test_unsatisfiable_lhs(self):
        """It should entail anything about an unsatisfiable concept"""
        ontology = parse_ontology("A sub some r.B.\nB sub bot.\n")
        self.assertTrue(elo_entail(ontology, parse_axiom("A sub C")))

    def test_dialect(self):
        """It should refuse ALCOuι input"""
        self.assertRaises(DialectError, elo_entail, parse_ontology("A sub not B."), parse_axiom("A sub B"))

    def test_sound_against_alcou(self):
        """It should only entail what type elimination entails"""
        reseed()
        for _ in range(suite_size(10, 100)):
            ontology = EloOntologyFactory()
            axiom = CI(random_concept(1, boolean=False), random_concept(1, boolean=False))
            if elo_entail(ontology, axiom):
                self.assertTrue(alcouiota_entail(ontology, axiom), f"{ontology} |= {axiom}")


######################################################################
#  C L A S S I F I C A T I O N   T E S T   C A S E S
######################################################################
class TestClassification(TestCase):
    """Saturated graphs and the concept hierarchy"""

    def test_classify(self):
        """It should list the named subsumers of every name"""
        hierarchy = classify(parse_ontology("A sub B.\nB sub C.\n"))
        self.assertEqual(hierarchy, {"A": ["A", "B", "C"], "B": ["B", "C"], "C": ["C"]})

    def test_classify_unsatisfiable(self):
        """It should mark unsatisfiable names with bot"""
        hierarchy = classify(parse_ontology("A sub some r.B.\nB sub bot.\n"))
        self.assertEqual(hierarchy["A"], ["bot"])
        self.assertEqual(hierarchy["B"], ["bot"])

    def test_graph_report(self):
        """It should dump labels one node per line"""
        graph = saturate(elo_normal_form(parse_ontology("A sub B.\nA sub some r.C.\n")), "A")
        lines = graph.report().splitlines()
        self.assertIn("A: A, B, top", lines)
        self.assertIn("A -> C: r", lines)
        self.assertTrue(graph.complete)

    def test_graph_queries(self):
        """It should answer subsumption and unsatisfiability for the target"""
        graph = saturate(elo_normal_form(parse_ontology("A sub B.")), Name("A"))
        self.assertTrue(graph.subsumes(Name("B")))
        self.assertFalse(graph.unsatisfiable())
        self.assertNotIn(Bot(), graph.subsumers())

    def test_normal_form_required(self):
        """It should refuse an ontology outside normal form"""
        self.assertRaises(ShapeError, saturate, parse_ontology("A sub some r.(B and C)."), "A")


######################################################################
#  C A N O N I C A L   M O D E L   T E S T   C A S E S
######################################################################
class TestCanonicalModel(TestCase):
    """Finite canonical models from the saturated graph"""

    def test_model_of_ontology(self):
        """It should return a model of the ontology"""
        ontology = parse_ontology("A(a).\nA sub some r.B.\nB sub some s.{a}.\n")
        model = elo_model(ontology)
        self.assertIsNotNone(model)
        self.assertTrue(is_model(model.interp, ontology))
        self.assertIn("a", model.interp.individuals)

    def test_target_element(self):
        """It should put the target element in the target concept"""
        ontology = parse_ontology("A sub some r.B.\n")
        model = elo_model(ontology, "A")
        self.assertIn(model.target_element, model.interp.extension_of("A"))
        self.assertIn(model.target_element, model.interp.elements)

    def test_unsatisfiable(self):
        """It should return None when ⊥ is derived"""
        self.assertIsNone(elo_model(parse_ontology("top sub some r.B.\nB sub bot.\n")))
        graph = saturate(elo_normal_form(parse_ontology("A sub bot.")), "A")
        self.assertIsNone(canonical_model(graph))

    def test_random_models(self):
        """It should return models of random ELOuι ontologies"""
        reseed()
        for _ in range(suite_size(20, 200)):
            ontology = EloOntologyFactory()
            model = elo_model(ontology)
            if model is not None:
                self.assertTrue(is_model(model.interp, ontology), str(ontology))
