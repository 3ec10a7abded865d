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
Satisfiability Preserving Translations

dagger                 removes definite descriptions and nominals (partial -> total)
downde                 relativizes to a fresh existence concept De (partial -> total)
add_denotation_axioms  forces every individual to denote (total -> partial)
abstract_individuals   replaces individuals by concepts (partial -> total)
"""
import logging
from typing import Dict, List, Set

from freedl.common.errors import DialectError, ShapeError
from freedl.normalize import eliminate_assertions, is_alco_normal
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    Bot,
    Concept,
    ConceptAssertion,
    Conjunction,
    Dialect,
    ExistenceTop,
    Exists,
    Forall,
    Implies,
    Individual,
    Iota,
    Name,
    NegatedFormula,
    Nominal,
    Not,
    Ontology,
    Role,
    RoleAssertion,
    Term,
    TermEquality,
    Top,
    fresh_name,
    hashed_individual_name,
    render,
    signature_of,
    subconcepts,
    unique,
)

logger = logging.getLogger("flask.app")


######################################################################
# DAGGER
######################################################################
def dagger(ontology: Ontology) -> Ontology:
    """
    Translates an ALCOuι ontology in ALCO normal form into an ι-free ALCOu
    ontology that is satisfiable on total interpretations iff the input is
    satisfiable on partial ones

    {b}+ is a fresh name A_b, {ιB}+ is B, and {τ}* = {τ}+ ⊓ ∀u.({τ}+ ⇒ {a_τ})
    for a fresh individual a_τ per distinct τ.
    """
    for axiom in ontology:
        if not isinstance(axiom, CI) or not is_alco_normal(axiom):
            raise ShapeError(f"not in ALCO normal form: {render(axiom)}")
        if isinstance(axiom.lhs, Nominal) or isinstance(axiom.rhs, Nominal):
            nominal = axiom.lhs if isinstance(axiom.lhs, Nominal) else axiom.rhs
            if isinstance(nominal.term, Iota) and not isinstance(nominal.term.body, Name):
                raise ShapeError(f"definite description is not flattened: {render(axiom)}")

    signature = signature_of(ontology)
    taken_concepts: Set[str] = set(signature.concepts)
    taken_individuals: Set[str] = set(signature.individuals)
    plus: Dict[Term, Concept] = {}
    anchor: Dict[Term, Individual] = {}

    terms = sorted(
        {c.term for c in subconcepts(ontology) if isinstance(c, Nominal)},
        key=render,
    )
    for term in terms:
        if isinstance(term, Individual):
            name = fresh_name(f"A_{term.name}", taken_concepts)
            taken_concepts.add(name)
            plus[term] = Name(name)
            individual = fresh_name(f"a_{term.name}", taken_individuals)
        else:
            plus[term] = term.body
            individual = hashed_individual_name("dg", term, taken_individuals)
        taken_individuals.add(individual)
        anchor[term] = Individual(individual)

    def star(term: Term) -> Concept:
        guard = Forall(UNIVERSAL, Implies(plus[term], Nominal(anchor[term])))
        return And((plus[term], guard))

    axioms: List[CI] = []
    for ci in ontology:
        if isinstance(ci.lhs, Nominal):
            axioms.append(CI(star(ci.lhs.term), ci.rhs))
        elif isinstance(ci.rhs, Nominal):
            axioms.append(CI(ci.lhs, star(ci.rhs.term)))
        else:
            axioms.append(ci)
    for term in terms:
        axioms.append(CI(plus[term], Forall(UNIVERSAL, Implies(Nominal(anchor[term]), plus[term]))))
    logger.debug("Dagger translation: %d nominals replaced", len(terms))
    return Ontology(Dialect.ALCO, unique(axioms))


######################################################################
# EXISTENCE RELATIVIZATION
######################################################################
def downde_concept(concept: Concept, existence: Name) -> Concept:
    """C↓De"""
    if isinstance(concept, Bot):
        return concept
    if isinstance(concept, (Top, Name)):
        return And((existence, concept))
    if isinstance(concept, Nominal):
        if isinstance(concept.term, Individual):
            return And((existence, concept))
        return Nominal(Iota(And((existence, downde_concept(concept.term.body, existence)))))
    if isinstance(concept, Not):
        return Not(downde_concept(concept.operand, existence))
    if isinstance(concept, And):
        return And(tuple(downde_concept(op, existence) for op in concept.operands))
    if isinstance(concept, Exists):
        filler = And((existence, downde_concept(concept.filler, existence)))
        return And((existence, Exists(concept.role, filler)))
    if isinstance(concept, ExistenceTop):
        raise DialectError("the existence concept has no partial counterpart")
    raise TypeError(f"not a concept: {concept!r}")


def existence_name(ontology: Ontology) -> Name:
    """A fresh name for the existence concept"""
    return Name(fresh_name("De", signature_of(ontology).concepts))


def downde(ontology: Ontology) -> Ontology:
    """O↓De: satisfiable on total interpretations iff O is on partial ones"""
    for axiom in ontology:
        if not isinstance(axiom, CI):
            raise ShapeError(f"assertions must be eliminated first: {render(axiom)}")
    existence = existence_name(ontology)
    axioms = [
        CI(And((existence, downde_concept(ci.lhs, existence))), downde_concept(ci.rhs, existence))
        for ci in ontology
    ]
    axioms.append(CI(Top(), Exists(UNIVERSAL, existence)))
    return ontology.replace(axioms)


######################################################################
# DENOTATION AND INDIVIDUAL ABSTRACTION
######################################################################
def add_denotation_axioms(ontology: Ontology) -> Ontology:
    """O ∪ {⊤ ⊑ ∃u.{a}} for every individual a of O"""
    individuals = sorted(signature_of(ontology).individuals)
    return ontology.extend(CI(Top(), Exists(UNIVERSAL, Nominal(Individual(a)))) for a in individuals)


def abstract_individuals(ontology: Ontology) -> Ontology:
    """Replaces {a} by a fresh B_a and adds B_a ⊑ {b_a}"""
    flat = eliminate_assertions(ontology)
    signature = signature_of(flat)
    if not signature.individuals:
        return flat
    taken_concepts = set(signature.concepts)
    taken_individuals = set(signature.individuals)
    replacement: Dict[str, Name] = {}
    anchors: List[CI] = []
    for individual in sorted(signature.individuals):
        concept = Name(fresh_name(f"B_{individual}", taken_concepts))
        taken_concepts.add(concept.name)
        anchor = fresh_name(f"b_{individual}", taken_individuals)
        taken_individuals.add(anchor)
        replacement[individual] = concept
        anchors.append(CI(concept, Nominal(Individual(anchor))))

    def visit(concept: Concept) -> Concept:
        if isinstance(concept, Nominal):
            if isinstance(concept.term, Individual):
                return replacement[concept.term.name]
            return Nominal(Iota(visit(concept.term.body)))
        if isinstance(concept, Not):
            return Not(visit(concept.operand))
        if isinstance(concept, And):
            return And(tuple(visit(op) for op in concept.operands))
        if isinstance(concept, Exists):
            return Exists(concept.role, visit(concept.filler))
        return concept

    axioms = [CI(visit(ci.lhs), visit(ci.rhs)) for ci in flat]
    return flat.replace(axioms + anchors)


######################################################################
# FORMULA INTERNALIZATION
######################################################################
def internalize(axiom) -> Concept:
    """
    κ(φ): a concept whose extension is the whole domain when φ holds
    (under partial semantics) and empty otherwise
    """
    if isinstance(axiom, CI):
        return Not(Exists(UNIVERSAL, And((axiom.lhs, Not(axiom.rhs)))))
    if isinstance(axiom, ConceptAssertion):
        return Exists(UNIVERSAL, And((Nominal(axiom.term), axiom.concept)))
    if isinstance(axiom, RoleAssertion):
        return Exists(UNIVERSAL, And((Nominal(axiom.subject), Exists(Role(axiom.role), Nominal(axiom.object)))))
    if isinstance(axiom, TermEquality):
        return Exists(UNIVERSAL, And((Nominal(axiom.left), Nominal(axiom.right))))
    if isinstance(axiom, NegatedFormula):
        return Not(internalize(axiom.formula))
    if isinstance(axiom, Conjunction):
        return And(tuple(internalize(formula) for formula in axiom.formulas))
    raise TypeError(f"not an axiom: {axiom!r}")
