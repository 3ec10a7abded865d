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
Test cases for dual-domain semantics and the ⊞ translation
"""
from unittest import TestCase

from freedl.common.errors import DialectError, InterpretationError
from freedl.dual_domain import (
    NEGATIVE,
    POSITIVE,
    DualDomainInterpretation,
    boxcircle_translate,
    dd_concept_extension,
    dd_sat,
    dd_satisfies,
    polarity_of,
)
from freedl.parser import parse_axiom, parse_concept, parse_ontology
from freedl.syntax import UNIVERSAL, Dialect, Exists, Name, signature_of

SAMPLE = {
    "domain": ["d1", "d2", "d3"],
    "inner": ["d1", "d2"],
    "concepts": {"A": ["d1", "d3"], "B": ["d2", "d3"]},
    "roles": {"r": [["d1", "d2"], ["d1", "d3"]]},
    "individuals": {"a": "d1", "b": "d3"},
    "iotaFallback": {},
}


######################################################################
#  I N T E R P R E T A T I O N   T E S T   C A S E S
######################################################################
class TestDualDomainInterpretation(TestCase):
    """Outer and inner domains"""

    def test_round_trip(self):
        """It should serialize back into the same document"""
        interp = DualDomainInterpretation.from_dict(SAMPLE)
        self.assertEqual(interp.to_dict(), SAMPLE)
        self.assertEqual(DualDomainInterpretation.from_json('{"domain": ["d1"]}').outer, ("d1",))

    def test_inner_is_proper(self):
        """It should refuse an inner domain equal to the outer one"""
        bad = {"domain": ["d1"], "inner": ["d1"]}
        self.assertRaises(InterpretationError, DualDomainInterpretation.from_dict, bad)

    def test_fallback_outside_inner(self):
        """It should refuse a fallback inside the inner domain"""
        bad = dict(SAMPLE, iotaFallback={"iota A": "d1"})
        self.assertRaises(InterpretationError, DualDomainInterpretation.from_dict, bad)

    def test_missing_domain(self):
        """It should name the missing member"""
        self.assertRaises(InterpretationError, DualDomainInterpretation.from_dict, {"inner": []})

    def test_polarity(self):
        """It should accept the spellings of both polarities"""
        self.assertEqual(polarity_of("pos"), POSITIVE)
        self.assertEqual(polarity_of(" Negative "), NEGATIVE)
        self.assertRaises(ValueError, polarity_of, "neutral")


######################################################################
#  E V A L U A T I O N   T E S T   C A S E S
######################################################################
class TestDualDomainEvaluation(TestCase):
    """Concepts over the outer domain, existentials over the inner one"""

    def setUp(self):
        self.interp = DualDomainInterpretation.from_dict(SAMPLE)

    def extension(self, text):
        """Extension of a concept in the sample"""
        return dd_concept_extension(self.interp, parse_concept(text))

    def test_concepts(self):
        """It should evaluate names, etop and negation over the outer domain"""
        self.assertEqual(self.extension("etop"), frozenset({"d1", "d2"}))
        self.assertEqual(self.extension("not A"), frozenset({"d2"}))
        self.assertEqual(self.extension("{b}"), frozenset({"d3"}))

    def test_existentials_need_existence(self):
        """It should only count existing successors"""
        self.assertEqual(self.extension("some r.B"), frozenset({"d1"}))
        self.assertEqual(self.extension("some r.A"), frozenset())

    def test_definite_descriptions(self):
        """It should take the unique existing instance, else the fallback"""
        self.assertEqual(self.extension("{iota A}"), frozenset({"d1"}))
        self.assertEqual(self.extension("{iota (A or B)}"), frozenset({"d3"}))

    def test_universal_role(self):
        """It should refuse the universal role"""
        self.assertRaises(DialectError, dd_concept_extension, self.interp, Exists(UNIVERSAL, Name("A")))

    def test_polarities(self):
        """It should require existence for atoms only under negative semantics"""
        for text, positive, negative in (
            ("A(b)", True, False),
            ("A(a)", True, True),
            ("b = b", True, False),
            ("r(a, b)", True, False),
            ("not [etop(b)]", True, True),
            ("B sub etop", True, True),
            ("A sub B", False, False),
        ):
            axiom = parse_axiom(text)
            self.assertEqual(dd_satisfies(self.interp, axiom, POSITIVE), positive, text)
            self.assertEqual(dd_satisfies(self.interp, axiom, NEGATIVE), negative, text)

    def test_ontology_as_conjunction(self):
        """It should treat an ontology as the conjunction of its formulas"""
        self.assertTrue(dd_satisfies(self.interp, parse_ontology("A(a).\nB(b).\n"), "+"))
        self.assertFalse(dd_satisfies(self.interp, parse_ontology("A(a).\nB(b).\n"), "-"))


######################################################################
#  S A T I S F I A B I L I T Y   T E S T   C A S E S
######################################################################
class TestDualDomainSatisfiability(TestCase):
    """Satisfiability through the ⊞ translation"""

    def test_self_equality(self):
        """It should make a = a valid only under positive semantics"""
        formula = parse_ontology("not [a = a].")
        self.assertFalse(dd_sat(formula, "+"))
        self.assertTrue(dd_sat(formula, "-"))

    def test_assertion_needs_existence(self):
        """It should make A(a) imply etop(a) only under negative semantics"""
        formula = parse_ontology("A(a).\nnot [etop(a)].\n")
        self.assertTrue(dd_sat(formula, "+"))
        self.assertFalse(dd_sat(formula, "-"))

    def test_definite_descriptions(self):
        """It should let a non-denoting description fall back outside existence"""
        formula = parse_ontology("not [etop(iota A)].\n")
        self.assertTrue(dd_sat(formula, "pos"))
        formula = parse_ontology("[etop sub A and not [etop(iota A)]].\n(etop and A) sub {a}.\netop(a).\n")
        self.assertFalse(dd_sat(formula, "pos"))

    def test_routes_agree(self):
        """It should give the same verdict on both satisfiability routes"""
        formula = parse_ontology("A(a).\nnot [a = iota A].\n")
        self.assertEqual(dd_sat(formula, "-", route="direct"), dd_sat(formula, "-", route="translation"))

    def test_translation(self):
        """It should produce an ALCOuι ontology with a fresh existence name"""
        formula = parse_ontology("Ex(a).\nnot [a = b].\n")
        translated = boxcircle_translate(formula, "-")
        self.assertEqual(translated.dialect, Dialect.ALCO)
        self.assertIn("Ex1", signature_of(translated).concepts)
        self.assertIn("Ex1", signature_of(boxcircle_translate(parse_ontology("Ex(a).\netop(a).\n"), "+")).concepts)

    def test_positive_translation_without_existence(self):
        """It should leave the existence name out of positive atoms"""
        translated = boxcircle_translate(parse_ontology("Ex(a).\nnot [a = b].\n"), "+")
        self.assertNotIn("Ex1", signature_of(translated).concepts)
        self.assertIn("Ex", signature_of(translated).concepts)
