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
Test cases for the normal forms
"""
from unittest import TestCase

from freedl.common.errors import DialectError, ShapeError
from freedl.normalize import (
    alco_normal_form,
    eliminate_assertions,
    elo_normal_form,
    flatten,
    is_alco_normal,
    is_elo_normal,
)
from freedl.parser import parse_axiom, parse_ontology
from freedl.semantics import PartialInterpretation, is_model
from freedl.syntax import CI, Iota, Name, Nominal, signature_of, subconcepts
from .factories import EloOntologyFactory, InterpretationFactory, OntologyFactory, reseed, suite_size


def _iota_bodies(ontology):
    return [c.term.body for c in subconcepts(ontology) if isinstance(c, Nominal) and isinstance(c.term, Iota)]


######################################################################
#  A S S E R T I O N   T E S T   C A S E S
######################################################################
class TestAssertionElimination(TestCase):
    """Assertions become CIs with the same models"""

    def test_concept_assertion(self):
        """It should turn A(a) into {a} sub A and top sub some u.{a}"""
        result = eliminate_assertions(parse_ontology("A(a)."))
        self.assertEqual(result.axioms, (parse_axiom("{a} sub A"), parse_axiom("top sub some u.{a}")))

    def test_role_assertion(self):
        """It should turn r(a, b) into {a} sub some r.{b} plus denotation of a"""
        result = eliminate_assertions(parse_ontology("r(a, b)."))
        self.assertIn(parse_axiom("{a} sub some r.{b}"), result.axioms)
        self.assertIn(parse_axiom("top sub some u.{a}"), result.axioms)

    def test_same_models(self):
        """It should keep exactly the models of the assertions"""
        ontology = parse_ontology("A(a).\nr(a, iota B).\n")
        result = eliminate_assertions(ontology)
        reseed()
        for _ in range(suite_size(60, 600)):
            interp = InterpretationFactory()
            self.assertEqual(is_model(interp, ontology), is_model(interp, result))

    def test_formulas_rejected(self):
        """It should refuse dual-domain formulas"""
        self.assertRaises(DialectError, eliminate_assertions, parse_ontology("not [a = b]."))


######################################################################
#  F L A T T E N I N G   T E S T   C A S E S
######################################################################
class TestFlatten(TestCase):
    """ι bodies become concept names"""

    def test_bodies_are_names(self):
        """It should leave only concept names as ι bodies"""
        ontology = parse_ontology("A sub some r.{iota (B and some s.{iota C})}.")
        result = flatten(ontology)
        self.assertTrue(all(isinstance(body, Name) for body in _iota_bodies(result)))
        self.assertGreater(len(result), len(ontology))

    def test_named_bodies_untouched(self):
        """It should not rename a body that is already a name"""
        ontology = parse_ontology("A sub {iota B}.")
        self.assertEqual(flatten(ontology), ontology)

    def test_shared_bodies_share_names(self):
        """It should give equal bodies one name"""
        result = flatten(parse_ontology("A sub {iota (B and C)}.\nD sub {iota (B and C)}.\n"))
        self.assertEqual(len(set(_iota_bodies(result))), 1)

    def test_only_cis(self):
        """It should refuse assertions"""
        self.assertRaises(ShapeError, flatten, parse_ontology("A(a)."))


######################################################################
#  E L O U ι   N O R M A L   F O R M   T E S T   C A S E S
######################################################################
class TestEloNormalForm(TestCase):
    """The five ELOuι shapes"""

    def test_shapes(self):
        """It should produce only normal form CIs"""
        ontology = parse_ontology(
            "(A and (B and C)) sub some r.(D and {iota some s.E}).\n"
            "some r.some s.A sub (B and {a}).\n"
            "{iota A}(b).\n"
        )
        result = elo_normal_form(ontology)
        for ci in result:
            self.assertTrue(is_elo_normal(ci), str(ci))

    def test_iota_companions(self):
        """It should add {iota A} sub A for every definite description"""
        result = elo_normal_form(parse_ontology("B sub {iota A}."))
        self.assertIn(CI(Nominal(Iota(Name("A"))), Name("A")), result.axioms)

    def test_signature_extended(self):
        """It should keep the input symbols"""
        ontology = parse_ontology("(A and B) sub some r.C.")
        self.assertTrue(signature_of(ontology) <= signature_of(elo_normal_form(ontology)))

    def test_negation_rejected(self):
        """It should refuse ALCOuι input"""
        self.assertRaises(DialectError, elo_normal_form, parse_ontology("A sub not B."))

    def test_random_shapes(self):
        """It should normalize random ELOuι ontologies"""
        reseed()
        for _ in range(suite_size(30, 300)):
            result = elo_normal_form(EloOntologyFactory(iota=True))
            for ci in result:
                self.assertTrue(is_elo_normal(ci), str(ci))


######################################################################
#  A L C O U ι   N O R M A L   F O R M   T E S T   C A S E S
######################################################################
class TestAlcoNormalForm(TestCase):
    """Nominals only in {τ} sub A and A sub {τ}"""

    def test_shapes(self):
        """It should produce only ALCO normal form CIs"""
        ontology = parse_ontology("A sub (some r.{a} or not {iota some s.B}).\n{b} sub A.\n")
        for ci in alco_normal_form(ontology):
            self.assertTrue(is_alco_normal(ci), str(ci))

    def test_random_shapes(self):
        """It should normalize random ALCOuι ontologies"""
        reseed()
        for _ in range(suite_size(30, 300)):
            for ci in alco_normal_form(OntologyFactory(iota=True)):
                self.assertTrue(is_alco_normal(ci), str(ci))

    def test_conservative(self):
        """It should keep every model of the result a model of the input"""
        ontology = parse_ontology("A sub some r.{a}.\n")
        result = alco_normal_form(ontology)
        interp = PartialInterpretation.from_dict(
            {
                "domain": ["d1"],
                "concepts": {"A": ["d1"], **{name: ["d1"] for name in signature_of(result).concepts - {"A"}}},
                "roles": {"r": [["d1", "d1"]]},
                "individuals": {"a": "d1"},
            }
        )
        self.assertTrue(is_model(interp, result))
        self.assertTrue(is_model(interp, ontology))

    def test_dual_domain_rejected(self):
        """It should refuse ALCOι* input"""
        self.assertRaises(DialectError, alco_normal_form, parse_ontology("etop sub A."))
