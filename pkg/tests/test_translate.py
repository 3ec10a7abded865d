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
Test cases for the satisfiability preserving translations
"""
from unittest import TestCase

from freedl.common.errors import ShapeError
from freedl.normalize import alco_normal_form
from freedl.parser import parse_axiom, parse_ontology
from freedl.semantics import PartialInterpretation, concept_extension, is_model, satisfies_axiom
from freedl.syntax import CI, Individual, Iota, Name, Nominal, signature_of, subconcepts
from freedl.translate import (
    abstract_individuals,
    add_denotation_axioms,
    dagger,
    downde,
    downde_concept,
    existence_name,
    internalize,
)
from .factories import InterpretationFactory, random_concept, reseed, suite_size


def _nominals(ontology):
    return [c for c in subconcepts(ontology) if isinstance(c, Nominal)]


######################################################################
#  D A G G E R   T E S T   C A S E S
######################################################################
class TestDagger(TestCase):
    """Partial to total by fresh nominals"""

    def test_removes_definite_descriptions(self):
        """It should leave no ι-terms and no original individuals"""
        ontology = alco_normal_form(parse_ontology("A sub some r.{iota B}.\n{a} sub not A.\n"))
        result = dagger(ontology)
        self.assertFalse(any(isinstance(n.term, Iota) for n in _nominals(result)))
        self.assertNotIn("a", signature_of(result).individuals)
        self.assertIn("A_a", signature_of(result).concepts)

    def test_one_anchor_per_term(self):
        """It should introduce one fresh individual per nominal"""
        ontology = alco_normal_form(parse_ontology("{a} sub A.\nB sub {a}.\nC sub {iota D}.\n"))
        self.assertEqual(len(signature_of(dagger(ontology)).individuals), 2)

    def test_requires_normal_form(self):
        """It should refuse input outside the ALCO normal form"""
        self.assertRaises(ShapeError, dagger, parse_ontology("A sub some r.{a}."))


######################################################################
#  E X I S T E N C E   T E S T   C A S E S
######################################################################
class TestDownde(TestCase):
    """Relativization to an existence concept"""

    def test_existence_axiom(self):
        """It should require some existing element"""
        ontology = parse_ontology("A sub some r.B.")
        result = downde(ontology)
        existence = existence_name(ontology)
        self.assertEqual(existence, Name("De"))
        self.assertIn(parse_axiom("top sub some u.De"), result.axioms)

    def test_fresh_existence_name(self):
        """It should avoid names of the input"""
        self.assertEqual(existence_name(parse_ontology("De sub A.")), Name("De1"))

    def test_relativized_concept(self):
        """It should relativize names and existentials"""
        existence = Name("De")
        self.assertEqual(downde_concept(Name("A"), existence), parse_axiom("(De and A) sub top").lhs)
        relativized = downde_concept(parse_axiom("some r.A sub top").lhs, existence)
        self.assertEqual(relativized, parse_axiom("(De and some r.(De and (De and A))) sub top").lhs)

    def test_assertions_rejected(self):
        """It should refuse assertions"""
        self.assertRaises(ShapeError, downde, parse_ontology("A(a)."))

    def test_models_restrict(self):
        """It should turn a model into a model of the relativized ontology"""
        ontology = parse_ontology("A sub some r.A.")
        interp = PartialInterpretation.from_dict(
            {"domain": ["d1", "d2"], "concepts": {"A": ["d1"], "De": ["d1"]}, "roles": {"r": [["d1", "d1"]]}}
        )
        self.assertTrue(is_model(interp, downde(ontology)))


######################################################################
#  D E N O T A T I O N   A N D   A B S T R A C T I O N   T E S T   C A S E S
######################################################################
class TestIndividuals(TestCase):
    """Forcing denotation and abstracting individuals"""

    def test_denotation_axioms(self):
        """It should add top sub some u.{a} for every individual"""
        result = add_denotation_axioms(parse_ontology("A sub {a}.\n{b} sub B.\n"))
        self.assertIn(parse_axiom("top sub some u.{a}"), result.axioms)
        self.assertIn(parse_axiom("top sub some u.{b}"), result.axioms)
        self.assertEqual(len(result), 4)

    def test_abstract_individuals(self):
        """It should replace {a} by B_a and anchor it with B_a sub {b_a}"""
        result = abstract_individuals(parse_ontology("A sub some r.{a}."))
        self.assertIn(CI(Name("A"), parse_axiom("some r.B_a sub top").lhs), result.axioms)
        self.assertIn(CI(Name("B_a"), Nominal(Individual("b_a"))), result.axioms)
        self.assertEqual(signature_of(result).individuals, frozenset({"b_a"}))

    def test_no_individuals(self):
        """It should leave an individual-free ontology alone"""
        ontology = parse_ontology("A sub B.")
        self.assertEqual(abstract_individuals(ontology), ontology)


######################################################################
#  I N T E R N A L I Z A T I O N   T E S T   C A S E S
######################################################################
class TestInternalize(TestCase):
    """Formulas as concepts that are everything or nothing"""

    def test_everything_or_nothing(self):
        """It should be the whole domain when the axiom holds and empty otherwise"""
        reseed()
        for _ in range(suite_size(60, 600)):
            interp = InterpretationFactory()
            axiom = CI(random_concept(2, iota=True), random_concept(2, iota=True))
            expected = interp.elements if satisfies_axiom(interp, axiom) else frozenset()
            self.assertEqual(concept_extension(interp, internalize(axiom)), expected)

    def test_formulas(self):
        """It should internalize equality and negation"""
        interp = PartialInterpretation.from_dict({"domain": ["d1"], "individuals": {"a": "d1"}})
        self.assertEqual(concept_extension(interp, internalize(parse_axiom("a = a"))), frozenset({"d1"}))
        self.assertEqual(concept_extension(interp, internalize(parse_axiom("not [a = b]"))), frozenset({"d1"}))
