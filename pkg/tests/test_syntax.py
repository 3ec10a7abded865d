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
Test cases for the abstract syntax
"""
from unittest import TestCase

from freedl.common.errors import DialectError
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    ConceptAssertion,
    Conjunction,
    Dialect,
    ExistenceTop,
    Exists,
    Forall,
    Individual,
    Iota,
    Name,
    NegatedFormula,
    Not,
    Ontology,
    Or,
    Role,
    Signature,
    TermEquality,
    Top,
    check_dialect,
    detect_dialect,
    fresh_name,
    hashed_concept_name,
    iota_nominal,
    iota_terms,
    nominal,
    render,
    role_depth,
    signature_of,
    size,
    subconcepts,
)

A, B = Name("A"), Name("B")
R = Role("r")


######################################################################
#  C O N C E P T   T E S T   C A S E S
######################################################################
class TestConcepts(TestCase):
    """Concept constructors and sugar"""

    def test_conjunction_flattens(self):
        """It should flatten nested conjunctions"""
        concept = And((A, And((B, nominal("a")))))
        self.assertEqual(concept.operands, (A, B, nominal("a")))

    def test_conjunction_needs_two(self):
        """It should refuse a conjunction with a single operand"""
        self.assertRaises(ValueError, And, (A,))

    def test_sugar_desugars(self):
        """It should store or, forall and implies in desugared form"""
        self.assertEqual(Or(A, B), Not(And((Not(A), Not(B)))))
        self.assertEqual(Forall(R, A), Not(Exists(R, Not(A))))

    def test_universal_role(self):
        """It should recognise the universal role"""
        self.assertTrue(UNIVERSAL.is_universal)
        self.assertFalse(R.is_universal)

    def test_structural_equality(self):
        """It should compare concepts structurally and hash them"""
        self.assertEqual(iota_nominal(A), iota_nominal(Name("A")))
        self.assertEqual(len({Exists(R, A), Exists(Role("r"), Name("A"))}), 1)


######################################################################
#  S I G N A T U R E   T E S T   C A S E S
######################################################################
class TestSignatures(TestCase):
    """Signatures and listings"""

    def test_signature_of_ontology(self):
        """It should collect names from CIs, assertions and ι bodies"""
        ontology = Ontology(
            Dialect.ALCO,
            (
                CI(A, Exists(R, iota_nominal(Exists(Role("s"), nominal("b"))))),
                ConceptAssertion(B, Individual("a")),
                CI(Top(), Exists(UNIVERSAL, A)),
            ),
        )
        signature = signature_of(ontology)
        self.assertEqual(signature.concepts, frozenset({"A", "B"}))
        self.assertEqual(signature.roles, frozenset({"r", "s"}))
        self.assertEqual(signature.individuals, frozenset({"a", "b"}))

    def test_universal_role_not_in_signature(self):
        """It should leave u out of the role names"""
        self.assertEqual(signature_of(Exists(UNIVERSAL, A)).roles, frozenset())

    def test_listing_resolves_roles(self):
        """It should sort a Σ listing into concepts, roles and individuals"""
        reference = Signature(roles=frozenset({"hasLoc"}))
        sigma = Signature.from_listing("KRConf, hasLoc ,VirtualLoc,kr20", reference)
        self.assertEqual(sigma.concepts, frozenset({"KRConf", "VirtualLoc"}))
        self.assertEqual(sigma.roles, frozenset({"hasLoc"}))
        self.assertEqual(sigma.individuals, frozenset({"kr20"}))
        self.assertEqual(sigma.listing(), "KRConf,VirtualLoc,hasLoc,kr20")

    def test_signature_operators(self):
        """It should join and compare signatures"""
        small = Signature(concepts=frozenset({"A"}))
        large = small | Signature(roles=frozenset({"r"}))
        self.assertTrue(small <= large)
        self.assertFalse(large <= small)
        self.assertEqual(len(large), 2)


######################################################################
#  M E A S U R E S   T E S T   C A S E S
######################################################################
class TestMeasures(TestCase):
    """Subconcepts, size and role depth"""

    def test_subconcepts_include_iota_bodies(self):
        """It should return ι bodies among the subconcepts"""
        concept = Exists(R, iota_nominal(And((A, B))))
        found = subconcepts(concept)
        self.assertIn(And((A, B)), found)
        self.assertIn(A, found)
        self.assertIn(iota_nominal(And((A, B))), found)

    def test_iota_terms_in_assertions(self):
        """It should find definite descriptions used as assertion terms"""
        term = Iota(A)
        terms = iota_terms([ConceptAssertion(B, term), TermEquality(Individual("a"), Iota(B))])
        self.assertEqual(terms, {term, Iota(B)})

    def test_size(self):
        """It should count constructors"""
        self.assertEqual(size(A), 1)
        self.assertEqual(size(Exists(R, A)), 2)
        self.assertEqual(size(And((A, B))), 3)
        self.assertEqual(size(iota_nominal(A)), 2)

    def test_role_depth(self):
        """It should count nested existentials, inside ι bodies too"""
        self.assertEqual(role_depth(A), 0)
        self.assertEqual(role_depth(Exists(R, Exists(R, A))), 2)
        self.assertEqual(role_depth(iota_nominal(Exists(R, A))), 1)


######################################################################
#  D I A L E C T   T E S T   C A S E S
######################################################################
class TestDialects(TestCase):
    """Dialect detection and checking"""

    def test_detect_elo(self):
        """It should pick ELOuι for negation-free CIs"""
        self.assertEqual(detect_dialect([CI(A, Exists(UNIVERSAL, nominal("a")))]), Dialect.ELO)

    def test_detect_alco(self):
        """It should pick ALCOuι when negation occurs"""
        self.assertEqual(detect_dialect([CI(A, Not(B))]), Dialect.ALCO)

    def test_detect_alco_star(self):
        """It should pick ALCOι* for formulas and the existence concept"""
        self.assertEqual(detect_dialect([NegatedFormula(CI(A, B))]), Dialect.ALCO_STAR)
        self.assertEqual(detect_dialect([CI(ExistenceTop(), A)]), Dialect.ALCO_STAR)

    def test_universal_role_with_formulas(self):
        """It should reject the universal role in a dual-domain formula"""
        with self.assertRaises(DialectError):
            detect_dialect([Conjunction((CI(A, Exists(UNIVERSAL, B)), TermEquality(Individual("a"), Individual("b"))))])

    def test_check_dialect(self):
        """It should name the offending construct"""
        with self.assertRaises(DialectError) as context:
            check_dialect(CI(A, Not(B)), Dialect.ELO)
        self.assertIn("'not'", str(context.exception))
        check_dialect(CI(A, Not(B)), Dialect.ALCO)


######################################################################
#  N A M E S   A N D   R E N D E R I N G   T E S T   C A S E S
######################################################################
class TestNamesAndRendering(TestCase):
    """Fresh names and the surface syntax"""

    def test_fresh_name(self):
        """It should append the least free numeric suffix"""
        self.assertEqual(fresh_name("X", []), "X")
        self.assertEqual(fresh_name("X", ["X", "X1"]), "X2")

    def test_hashed_names_are_stable(self):
        """It should derive the same fresh name from the same concept"""
        first = hashed_concept_name("nf", And((A, B)))
        self.assertEqual(first, hashed_concept_name("nf", And((A, B))))
        self.assertTrue(first.startswith("NF_"))

    def test_render(self):
        """It should render concepts and axioms in the surface syntax"""
        self.assertEqual(render(And((A, B, nominal("a")))), "(A and (B and {a}))")
        self.assertEqual(render(CI(iota_nominal(A), Exists(UNIVERSAL, Top()))), "{iota A} sub some u.top.")
        self.assertEqual(render(NegatedFormula(TermEquality(Individual("a"), Individual("b")))), "not [a = b].")

    def test_render_ontology(self):
        """It should render one axiom per line"""
        ontology = Ontology(Dialect.ELO, (CI(A, B), ConceptAssertion(A, Individual("a"))))
        self.assertEqual(render(ontology), "A sub B.\nA(a).\n")
