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
Normal Forms

Every transformation here returns a conservative extension of its input.
Fresh concept names are derived from a hash of the concept they abbreviate,
so equal subconcepts share one name and outputs are reproducible.
"""
import logging
from typing import Dict, List, Set

from freedl.common.errors import DialectError, ShapeError
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    Bot,
    Concept,
    ConceptAssertion,
    Conjunction,
    Dialect,
    Exists,
    Iota,
    Name,
    NegatedFormula,
    Nominal,
    Not,
    Ontology,
    Role,
    RoleAssertion,
    TermEquality,
    Top,
    check_dialect,
    hashed_concept_name,
    render,
    signature_of,
    subconcepts,
    unique,
)

logger = logging.getLogger("flask.app")

FRESH_PREFIX = "NF"


######################################################################
# ASSERTIONS
######################################################################
def eliminate_assertions(ontology: Ontology) -> Ontology:
    """Replaces every assertion by CIs that hold in exactly the same partial interpretations"""
    axioms: List[CI] = []
    for axiom in ontology:
        if isinstance(axiom, CI):
            axioms.append(axiom)
        elif isinstance(axiom, ConceptAssertion):
            axioms.append(CI(Nominal(axiom.term), axiom.concept))
            axioms.append(CI(Top(), Exists(UNIVERSAL, Nominal(axiom.term))))
        elif isinstance(axiom, RoleAssertion):
            axioms.append(CI(Nominal(axiom.subject), Exists(Role(axiom.role), Nominal(axiom.object))))
            axioms.append(CI(Top(), Exists(UNIVERSAL, Nominal(axiom.subject))))
        elif isinstance(axiom, (TermEquality, NegatedFormula, Conjunction)):
            raise DialectError(f"formula not expressible as CIs: {render(axiom)}")
        else:
            raise TypeError(f"not an axiom: {axiom!r}")
    return ontology.replace(axioms)


def _require_cis(ontology: Ontology) -> None:
    for axiom in ontology:
        if not isinstance(axiom, CI):
            raise ShapeError(f"only concept inclusions are accepted here: {render(axiom)}")


######################################################################
# FLATTENING
######################################################################
class _Namer:
    """Hands out one fresh concept name per abbreviated concept"""

    def __init__(self, ontology: Ontology, prefix: str = FRESH_PREFIX):
        self.prefix = prefix
        self.taken: Set[str] = set(signature_of(ontology).concepts)
        self.names: Dict[Concept, Name] = {}

    def __call__(self, concept: Concept) -> Name:
        name = self.names.get(concept)
        if name is None:
            name = Name(hashed_concept_name(self.prefix, concept, self.taken))
            self.taken.add(name.name)
            self.names[concept] = name
        return name


def flatten(ontology: Ontology) -> Ontology:
    """Makes every ι body a concept name, innermost descriptions first"""
    _require_cis(ontology)
    namer = _Namer(ontology)
    definitions: List[CI] = []
    defined: Set[Concept] = set()

    def visit(concept: Concept) -> Concept:
        if isinstance(concept, Nominal) and isinstance(concept.term, Iota):
            body = visit(concept.term.body)
            if isinstance(body, Name):
                return Nominal(Iota(body))
            name = namer(body)
            if body not in defined:
                defined.add(body)
                definitions.extend((CI(name, body), CI(body, name)))
            return Nominal(Iota(name))
        if isinstance(concept, Not):
            return Not(visit(concept.operand))
        if isinstance(concept, And):
            return And(tuple(visit(op) for op in concept.operands))
        if isinstance(concept, Exists):
            return Exists(concept.role, visit(concept.filler))
        return concept

    axioms = [CI(visit(ci.lhs), visit(ci.rhs)) for ci in ontology]
    if definitions:
        logger.debug("Flattening introduced %d definitions", len(definitions) // 2)
    return ontology.replace(axioms + definitions)


######################################################################
# ELOuι NORMAL FORM
######################################################################
def _lhs_empty(concept: Concept) -> bool:
    """True when the concept is syntactically empty"""
    if isinstance(concept, Bot):
        return True
    if isinstance(concept, And):
        return any(_lhs_empty(op) for op in concept.operands)
    if isinstance(concept, Exists):
        return _lhs_empty(concept.filler)
    return False


def _is_basic(concept: Concept) -> bool:
    return isinstance(concept, (Name, Top))


class _EloNormalizer:
    """Structural transformation into the five ELOuι shapes"""

    def __init__(self, ontology: Ontology):
        self.namer = _Namer(ontology)
        self.output: List[CI] = []
        self.lhs_defined: Set[Concept] = set()
        self.rhs_defined: Set[Concept] = set()

    def lhs_atom(self, concept: Concept) -> Concept:
        """A name X with concept ⊑ X"""
        if _is_basic(concept):
            return concept
        name = self.namer(concept)
        if concept not in self.lhs_defined:
            self.lhs_defined.add(concept)
            self.add(concept, name)
        return name

    def rhs_atom(self, concept: Concept) -> Concept:
        """A name X with X ⊑ concept"""
        if _is_basic(concept) or isinstance(concept, Bot):
            return concept
        name = self.namer(concept)
        if concept not in self.rhs_defined:
            self.rhs_defined.add(concept)
            self.add(name, concept)
        return name

    def add(self, lhs: Concept, rhs: Concept) -> None:
        """Normalizes lhs ⊑ rhs into the output"""
        # pylint: disable=too-many-return-statements
        if _lhs_empty(lhs) or isinstance(rhs, Top):
            return
        if isinstance(rhs, And):
            for operand in rhs.operands:
                self.add(lhs, operand)
            return
        if isinstance(rhs, Exists) and isinstance(rhs.filler, Bot):
            self.add(lhs, Bot())
            return
        if isinstance(lhs, Nominal):
            if _is_basic(rhs) or isinstance(rhs, Bot):
                self.output.append(CI(lhs, rhs))
            else:
                self.output.append(CI(lhs, self.rhs_atom(rhs)))
            return
        if _is_basic(lhs):
            if _is_basic(rhs) or isinstance(rhs, (Bot, Nominal)):
                self.output.append(CI(lhs, rhs))
            elif isinstance(rhs, Exists):
                self.output.append(CI(lhs, Exists(rhs.role, self.rhs_atom(rhs.filler))))
            else:
                raise DialectError(f"not an ELOuι concept: {render(rhs)}")
            return
        if isinstance(lhs, And):
            atoms = list(unique(self.lhs_atom(op) for op in lhs.operands))
            if len(atoms) == 1:
                self.add(atoms[0], rhs)
            elif len(atoms) == 2:
                self.output.append(CI(And(tuple(atoms)), self.rhs_atom(rhs)))
            else:
                head = self.lhs_atom(And((atoms[0], atoms[1])))
                self.add(And((head,) + tuple(atoms[2:])), rhs)
            return
        if isinstance(lhs, Exists):
            self.output.append(CI(Exists(lhs.role, self.lhs_atom(lhs.filler)), self.rhs_atom(rhs)))
            return
        raise DialectError(f"not an ELOuι concept: {render(lhs)}")


def elo_normal_form(ontology: Ontology) -> Ontology:
    """
    Puts an ELOuι ontology into normal form

    Every CI of the result has one of the shapes

        C1 ⊓ C2 ⊑ D     ∃r.C ⊑ D     C ⊑ ∃r.D     {τ} ⊑ D     C ⊑ {τ}

    with C, Ci in N_C ∪ {⊤}, D in N_C ∪ {⊤, ⊥}, τ an individual or ιA, and
    the companion {ιA} ⊑ A present for every {ιA}. A ⊑ B stands for A ⊓ A ⊑ B.
    """
    for axiom in ontology:
        check_dialect(axiom, Dialect.ELO)
    flat = flatten(eliminate_assertions(ontology))
    normalizer = _EloNormalizer(flat)
    for ci in flat:
        normalizer.add(ci.lhs, ci.rhs)
    axioms = list(normalizer.output)
    for concept in sorted(subconcepts(axioms), key=render):
        if isinstance(concept, Nominal) and isinstance(concept.term, Iota):
            axioms.append(CI(concept, concept.term.body))
    result = Ontology(Dialect.ELO, unique(axioms))
    logger.debug("ELO normal form: %d axioms in, %d out", len(ontology), len(result))
    return result


def is_elo_normal(ci: CI) -> bool:
    """True when ci has one of the ELOuι normal form shapes"""
    lhs, rhs = ci.lhs, ci.rhs
    conclusion = _is_basic(rhs) or isinstance(rhs, Bot)
    if isinstance(lhs, And):
        return len(lhs.operands) == 2 and all(_is_basic(op) for op in lhs.operands) and conclusion
    if isinstance(lhs, Exists):
        return _is_basic(lhs.filler) and conclusion
    if isinstance(lhs, Nominal):
        return _flat_term(lhs) and conclusion
    if _is_basic(lhs):
        if isinstance(rhs, Exists):
            return _is_basic(rhs.filler)
        if isinstance(rhs, Nominal):
            return _flat_term(rhs)
        return conclusion
    return False


def _flat_term(concept: Nominal) -> bool:
    return not isinstance(concept.term, Iota) or isinstance(concept.term.body, Name)


######################################################################
# ALCOuι NORMAL FORM
######################################################################
def _nominal_free(concept: Concept) -> bool:
    return not any(isinstance(c, Nominal) for c in subconcepts(concept))


def is_alco_normal(ci: CI) -> bool:
    """E ⊑ F nominal-free, {τ} ⊑ A or A ⊑ {τ}"""
    if isinstance(ci.lhs, Nominal) and isinstance(ci.rhs, Name):
        return _flat_term(ci.lhs)
    if isinstance(ci.lhs, Name) and isinstance(ci.rhs, Nominal):
        return _flat_term(ci.rhs)
    return _nominal_free(ci.lhs) and _nominal_free(ci.rhs)


def alco_normal_form(ontology: Ontology) -> Ontology:
    """Flattens, then abstracts every nominal inside a compound concept by N_τ ≡ {τ}"""
    if ontology.dialect == Dialect.ALCO_STAR:
        raise DialectError("dual-domain formulas have no ALCOuι normal form")
    flat = flatten(eliminate_assertions(ontology))
    namer = _Namer(flat)
    links: List[CI] = []

    def abstract(concept: Concept) -> Concept:
        if isinstance(concept, Nominal):
            name = namer(concept)
            links.extend((CI(concept, name), CI(name, concept)))
            return name
        if isinstance(concept, Not):
            return Not(abstract(concept.operand))
        if isinstance(concept, And):
            return And(tuple(abstract(op) for op in concept.operands))
        if isinstance(concept, Exists):
            return Exists(concept.role, abstract(concept.filler))
        return concept

    axioms: List[CI] = []
    for ci in flat:
        if is_alco_normal(ci):
            axioms.append(ci)
        else:
            axioms.append(CI(abstract(ci.lhs), abstract(ci.rhs)))
    return Ontology(Dialect.ALCO, unique(axioms + links))
