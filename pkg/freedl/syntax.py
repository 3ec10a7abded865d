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
Abstract Syntax

Concepts, terms, axioms and ontologies of the three dialects:

    ELO        ELOuι    (no negation)
    ALCO       ALCOuι
    ALCO_STAR  ALCOι*   (existence concept, term equality, formulas, no u)

All values are frozen dataclasses so they can be hashed, shared between
threads and used as dictionary keys by the reasoning engines.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, Optional, Set, Tuple, Union

from freedl.common.errors import DialectError


class Dialect(Enum):
    """Enumeration of the supported description logics"""

    ELO = "elo"
    ALCO = "alco"
    ALCO_STAR = "alco-star"


######################################################################
#  T E R M S   A N D   R O L E S
######################################################################
@dataclass(frozen=True)
class Role:
    """A role name, or the universal role u"""

    name: str

    @property
    def is_universal(self) -> bool:
        """True for the universal role"""
        return self.name == UNIVERSAL_NAME


UNIVERSAL_NAME = "u"
UNIVERSAL = Role(UNIVERSAL_NAME)


@dataclass(frozen=True)
class Individual:
    """An individual name"""

    name: str


@dataclass(frozen=True)
class Iota:
    """A definite description: the unique element of the body"""

    body: "Concept"


Term = Union[Individual, Iota]


######################################################################
#  C O N C E P T S
######################################################################
@dataclass(frozen=True)
class Top:
    """The top concept"""


@dataclass(frozen=True)
class Bot:
    """The bottom concept"""


@dataclass(frozen=True)
class ExistenceTop:
    """The existence concept of the dual-domain dialect (the inner domain)"""


@dataclass(frozen=True)
class Name:
    """A concept name"""

    name: str


@dataclass(frozen=True)
class Nominal:
    """The concept {τ}"""

    term: Term


@dataclass(frozen=True)
class Not:
    """Complement"""

    operand: "Concept"


@dataclass(frozen=True)
class And:
    """N-ary conjunction; nested conjunctions are flattened on construction"""

    operands: Tuple["Concept", ...]

    def __post_init__(self):
        flat = []
        for operand in self.operands:
            if isinstance(operand, And):
                flat.extend(operand.operands)
            else:
                flat.append(operand)
        if len(flat) < 2:
            raise ValueError("a conjunction needs at least two operands")
        object.__setattr__(self, "operands", tuple(flat))


@dataclass(frozen=True)
class Exists:
    """Existential restriction ∃r.C"""

    role: Role
    filler: "Concept"


Concept = Union[Top, Bot, ExistenceTop, Name, Nominal, Not, And, Exists]


def conj(*operands: Concept) -> Concept:
    """Conjunction that tolerates a single operand"""
    if len(operands) == 1:
        return operands[0]
    return And(tuple(operands))


# Sugar: stored in desugared form
def Or(left: Concept, right: Concept) -> Concept:  # pylint: disable=invalid-name
    """C ⊔ D as ¬(¬C ⊓ ¬D)"""
    return Not(And((Not(left), Not(right))))


def Implies(left: Concept, right: Concept) -> Concept:  # pylint: disable=invalid-name
    """C ⇒ D as ¬C ⊔ D"""
    return Or(Not(left), right)


def Forall(role: Role, filler: Concept) -> Concept:  # pylint: disable=invalid-name
    """∀r.C as ¬∃r.¬C"""
    return Not(Exists(role, Not(filler)))


def nominal(name: str) -> Nominal:
    """Shorthand for {a}"""
    return Nominal(Individual(name))


def iota_nominal(body: Concept) -> Nominal:
    """Shorthand for {ιC}"""
    return Nominal(Iota(body))


######################################################################
#  A X I O M S
######################################################################
@dataclass(frozen=True)
class CI:
    """Concept inclusion C ⊑ D"""

    lhs: Concept
    rhs: Concept


@dataclass(frozen=True)
class ConceptAssertion:
    """C(τ)"""

    concept: Concept
    term: Term


@dataclass(frozen=True)
class RoleAssertion:
    """r(τ1, τ2)"""

    role: str
    subject: Term
    object: Term


@dataclass(frozen=True)
class TermEquality:
    """τ1 = τ2 (dual-domain formulas only)"""

    left: Term
    right: Term


@dataclass(frozen=True)
class NegatedFormula:
    """¬(φ)"""

    formula: "Axiom"


@dataclass(frozen=True)
class Conjunction:
    """(φ ∧ ψ ∧ ...), flattened"""

    formulas: Tuple["Axiom", ...]

    def __post_init__(self):
        flat = []
        for formula in self.formulas:
            if isinstance(formula, Conjunction):
                flat.extend(formula.formulas)
            else:
                flat.append(formula)
        if len(flat) < 2:
            raise ValueError("a formula conjunction needs at least two operands")
        object.__setattr__(self, "formulas", tuple(flat))


Axiom = Union[CI, ConceptAssertion, RoleAssertion, TermEquality, NegatedFormula, Conjunction]


def equivalence(left: Concept, right: Concept) -> Tuple[CI, CI]:
    """C ≡ D as its two inclusions"""
    return (CI(left, right), CI(right, left))


@dataclass(frozen=True)
class Ontology:
    """An ordered collection of axioms in one dialect"""

    dialect: Dialect
    axioms: Tuple[Axiom, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator[Axiom]:
        return iter(self.axioms)

    def __len__(self) -> int:
        return len(self.axioms)

    @property
    def cis(self) -> Tuple[CI, ...]:
        """The concept inclusions, in order"""
        return tuple(ax for ax in self.axioms if isinstance(ax, CI))

    def extend(self, axioms: Iterable[Axiom], dialect: Optional[Dialect] = None) -> "Ontology":
        """Returns a copy with extra axioms appended (duplicates dropped)"""
        return Ontology(dialect or self.dialect, unique(self.axioms + tuple(axioms)))

    def replace(self, axioms: Iterable[Axiom], dialect: Optional[Dialect] = None) -> "Ontology":
        """Returns an ontology with the same dialect and new axioms"""
        return Ontology(dialect or self.dialect, unique(axioms))


def unique(items: Iterable) -> tuple:
    """Order preserving de-duplication"""
    return tuple(dict.fromkeys(items))


######################################################################
#  S I G N A T U R E S
######################################################################
@dataclass(frozen=True)
class Signature:
    """Concept, role and individual names"""

    concepts: FrozenSet[str] = frozenset()
    roles: FrozenSet[str] = frozenset()
    individuals: FrozenSet[str] = frozenset()

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(
            self.concepts | other.concepts,
            self.roles | other.roles,
            self.individuals | other.individuals,
        )

    def __le__(self, other: "Signature") -> bool:
        return (
            self.concepts <= other.concepts
            and self.roles <= other.roles
            and self.individuals <= other.individuals
        )

    def __len__(self) -> int:
        return len(self.concepts) + len(self.roles) + len(self.individuals)

    def symbols(self) -> FrozenSet[str]:
        """All names regardless of sort"""
        return self.concepts | self.roles | self.individuals

    def listing(self) -> str:
        """Comma separated listing, sorted"""
        return ",".join(sorted(self.symbols()))

    @classmethod
    def from_listing(cls, text: str, reference: Optional["Signature"] = None) -> "Signature":
        """
        Reads a comma separated Σ listing

        Uppercase-initial names are concept names. Lowercase names are roles
        when the reference signature knows them as roles, else individuals.
        """
        reference = reference or Signature()
        concepts, roles, individuals = set(), set(), set()
        for item in (part.strip() for part in text.split(",")):
            if not item:
                continue
            if item[0].isupper():
                concepts.add(item)
            elif item in reference.roles:
                roles.add(item)
            else:
                individuals.add(item)
        return cls(frozenset(concepts), frozenset(roles), frozenset(individuals))


def signature_of(item) -> Signature:
    """Returns the names occurring in a concept, term, axiom, ontology or iterable"""
    concepts: Set[str] = set()
    roles: Set[str] = set()
    individuals: Set[str] = set()

    def visit_term(term: Term):
        if isinstance(term, Individual):
            individuals.add(term.name)
        else:
            visit(term.body)

    def visit(node):
        if isinstance(node, Name):
            concepts.add(node.name)
        elif isinstance(node, Nominal):
            visit_term(node.term)
        elif isinstance(node, Not):
            visit(node.operand)
        elif isinstance(node, And):
            for operand in node.operands:
                visit(operand)
        elif isinstance(node, Exists):
            if not node.role.is_universal:
                roles.add(node.role.name)
            visit(node.filler)
        elif isinstance(node, (Individual, Iota)):
            visit_term(node)
        elif isinstance(node, CI):
            visit(node.lhs)
            visit(node.rhs)
        elif isinstance(node, ConceptAssertion):
            visit(node.concept)
            visit_term(node.term)
        elif isinstance(node, RoleAssertion):
            roles.add(node.role)
            visit_term(node.subject)
            visit_term(node.object)
        elif isinstance(node, TermEquality):
            visit_term(node.left)
            visit_term(node.right)
        elif isinstance(node, NegatedFormula):
            visit(node.formula)
        elif isinstance(node, Conjunction):
            for formula in node.formulas:
                visit(formula)
        elif isinstance(node, (Ontology, list, tuple, set, frozenset)):
            for member in node:
                visit(member)

    visit(item)
    return Signature(frozenset(concepts), frozenset(roles), frozenset(individuals))


######################################################################
#  S U B C O N C E P T S
######################################################################
def subconcepts(item) -> Set[Concept]:
    """
    Returns con(x): every subconcept, including ι bodies and nominals

    Accepts a concept, an axiom, an ontology or an iterable of these.
    Terms of assertions contribute the subconcepts of their ι bodies.
    """
    found: Set[Concept] = set()

    def visit_term(term: Term):
        if isinstance(term, Iota):
            visit(term.body)

    def visit(node):
        if isinstance(node, (Top, Bot, ExistenceTop, Name, Nominal, Not, And, Exists)):
            if node in found:
                return
            found.add(node)
            if isinstance(node, Nominal):
                visit_term(node.term)
            elif isinstance(node, Not):
                visit(node.operand)
            elif isinstance(node, And):
                for operand in node.operands:
                    visit(operand)
            elif isinstance(node, Exists):
                visit(node.filler)
        elif isinstance(node, CI):
            visit(node.lhs)
            visit(node.rhs)
        elif isinstance(node, ConceptAssertion):
            visit(node.concept)
            visit_term(node.term)
        elif isinstance(node, RoleAssertion):
            visit_term(node.subject)
            visit_term(node.object)
        elif isinstance(node, TermEquality):
            visit_term(node.left)
            visit_term(node.right)
        elif isinstance(node, NegatedFormula):
            visit(node.formula)
        elif isinstance(node, Conjunction):
            for formula in node.formulas:
                visit(formula)
        elif isinstance(node, (Ontology, list, tuple, set, frozenset)):
            for member in node:
                visit(member)

    visit(item)
    return found


def iota_terms(item) -> Set[Iota]:
    """Every ι-term occurring anywhere in item, nested ones included"""
    terms: Set[Iota] = set()
    for concept in subconcepts(item):
        if isinstance(concept, Nominal) and isinstance(concept.term, Iota):
            terms.add(concept.term)

    # assertion terms are not wrapped in nominals
    def collect(node):
        if isinstance(node, ConceptAssertion):
            candidates = [node.term]
        elif isinstance(node, RoleAssertion):
            candidates = [node.subject, node.object]
        elif isinstance(node, TermEquality):
            candidates = [node.left, node.right]
        elif isinstance(node, NegatedFormula):
            collect(node.formula)
            return
        elif isinstance(node, Conjunction):
            for formula in node.formulas:
                collect(formula)
            return
        elif isinstance(node, (Ontology, list, tuple)):
            for member in node:
                collect(member)
            return
        else:
            return
        for term in candidates:
            if isinstance(term, Iota):
                terms.add(term)
                terms.update(iota_terms(term.body))

    collect(item)
    return terms


def size(node) -> int:
    """Number of constructors in a concept or term"""
    if isinstance(node, (Top, Bot, ExistenceTop, Name, Individual)):
        return 1
    if isinstance(node, Iota):
        return 1 + size(node.body)
    if isinstance(node, Nominal):
        return size(node.term)
    if isinstance(node, Not):
        return 1 + size(node.operand)
    if isinstance(node, And):
        return len(node.operands) - 1 + sum(size(op) for op in node.operands)
    if isinstance(node, Exists):
        return 1 + size(node.filler)
    raise TypeError(f"not a concept: {node!r}")


def role_depth(node) -> int:
    """Nesting depth of existential restrictions, counting inside ι bodies"""
    if isinstance(node, Nominal):
        return role_depth(node.term.body) if isinstance(node.term, Iota) else 0
    if isinstance(node, Not):
        return role_depth(node.operand)
    if isinstance(node, And):
        return max(role_depth(op) for op in node.operands)
    if isinstance(node, Exists):
        return 1 + role_depth(node.filler)
    return 0


######################################################################
#  D I A L E C T S
######################################################################
def _constructs(node) -> Iterator[Tuple[str, object]]:
    """Yields (construct-name, node) for every dialect relevant construct"""
    if isinstance(node, ExistenceTop):
        yield "etop", node
    elif isinstance(node, Not):
        yield "not", node
        yield from _constructs(node.operand)
    elif isinstance(node, And):
        for operand in node.operands:
            yield from _constructs(operand)
    elif isinstance(node, Exists):
        if node.role.is_universal:
            yield "u", node
        yield from _constructs(node.filler)
    elif isinstance(node, Nominal):
        yield from _constructs(node.term)
    elif isinstance(node, Iota):
        yield from _constructs(node.body)
    elif isinstance(node, CI):
        yield from _constructs(node.lhs)
        yield from _constructs(node.rhs)
    elif isinstance(node, ConceptAssertion):
        yield from _constructs(node.concept)
        yield from _constructs(node.term)
    elif isinstance(node, RoleAssertion):
        yield from _constructs(node.subject)
        yield from _constructs(node.object)
    elif isinstance(node, TermEquality):
        yield "term equality", node
        yield from _constructs(node.left)
        yield from _constructs(node.right)
    elif isinstance(node, NegatedFormula):
        yield "formula negation", node
        yield from _constructs(node.formula)
    elif isinstance(node, Conjunction):
        yield "formula conjunction", node
        for formula in node.formulas:
            yield from _constructs(formula)
    elif isinstance(node, Ontology):
        for axiom in node:
            yield from _constructs(axiom)


_FORBIDDEN = {
    Dialect.ELO: {"etop", "not", "term equality", "formula negation", "formula conjunction"},
    Dialect.ALCO: {"etop", "term equality", "formula negation", "formula conjunction"},
    Dialect.ALCO_STAR: {"u"},
}


def dialect_violation(item, dialect: Dialect) -> Optional[str]:
    """Returns the first construct of item not allowed in dialect, or None"""
    forbidden = _FORBIDDEN[dialect]
    for construct, _ in _constructs(item):
        if construct in forbidden:
            return construct
    return None


def check_dialect(item, dialect: Dialect) -> None:
    """Raises DialectError when item uses a construct outside dialect"""
    construct = dialect_violation(item, dialect)
    if construct:
        raise DialectError(f"'{construct}' is not allowed in dialect {dialect.value}: {render(item)}")


def detect_dialect(axioms: Iterable) -> Dialect:
    """The least expressive dialect accepting every axiom"""
    found = set()
    for axiom in axioms:
        found.update(name for name, _ in _constructs(axiom))
    if found & _FORBIDDEN[Dialect.ALCO]:
        if "u" in found:
            raise DialectError("universal role mixed with dual-domain constructs")
        return Dialect.ALCO_STAR
    if "not" in found:
        return Dialect.ALCO
    return Dialect.ELO


######################################################################
#  F R E S H   N A M E S
######################################################################
def fresh_name(base: str, taken: Iterable[str]) -> str:
    """base, or base with the least numeric suffix not in taken"""
    taken = set(taken)
    if base not in taken:
        return base
    index = 1
    while f"{base}{index}" in taken:
        index += 1
    return f"{base}{index}"


def stable_digest(item) -> str:
    """Short hash of the rendered form, stable across runs"""
    return hashlib.sha1(render(item).encode("utf-8")).hexdigest()[:8]


def hashed_concept_name(prefix: str, item, taken: Iterable[str] = ()) -> str:
    """Deterministic fresh concept name derived from item"""
    return fresh_name(f"{prefix.upper()}_{stable_digest(item)}", taken)


def hashed_individual_name(prefix: str, item, taken: Iterable[str] = ()) -> str:
    """Deterministic fresh individual name derived from item"""
    return fresh_name(f"{prefix.lower()}_{stable_digest(item)}", taken)


######################################################################
#  R E N D E R I N G
######################################################################
def render_term(term: Term) -> str:
    """Surface syntax of a term"""
    if isinstance(term, Individual):
        return term.name
    return f"iota {render_concept(term.body)}"


def render_concept(concept: Concept) -> str:
    """Surface syntax of a concept; conjunctions nest to the right"""
    if isinstance(concept, Top):
        return "top"
    if isinstance(concept, Bot):
        return "bot"
    if isinstance(concept, ExistenceTop):
        return "etop"
    if isinstance(concept, Name):
        return concept.name
    if isinstance(concept, Nominal):
        return "{" + render_term(concept.term) + "}"
    if isinstance(concept, Not):
        return "not " + render_concept(concept.operand)
    if isinstance(concept, And):
        text = render_concept(concept.operands[-1])
        for operand in reversed(concept.operands[:-1]):
            text = f"({render_concept(operand)} and {text})"
        return text
    if isinstance(concept, Exists):
        return f"some {concept.role.name}.{render_concept(concept.filler)}"
    raise TypeError(f"not a concept: {concept!r}")


def _render_formula(axiom: Axiom) -> str:
    if isinstance(axiom, CI):
        return f"{render_concept(axiom.lhs)} sub {render_concept(axiom.rhs)}"
    if isinstance(axiom, ConceptAssertion):
        return f"{render_concept(axiom.concept)}({render_term(axiom.term)})"
    if isinstance(axiom, RoleAssertion):
        return f"{axiom.role}({render_term(axiom.subject)}, {render_term(axiom.object)})"
    if isinstance(axiom, TermEquality):
        return f"{render_term(axiom.left)} = {render_term(axiom.right)}"
    if isinstance(axiom, NegatedFormula):
        return f"not [{_render_formula(axiom.formula)}]"
    if isinstance(axiom, Conjunction):
        text = _render_formula(axiom.formulas[-1])
        for formula in reversed(axiom.formulas[:-1]):
            text = f"[{_render_formula(formula)} and {text}]"
        return text
    raise TypeError(f"not an axiom: {axiom!r}")


def render(item) -> str:
    """
    Renders a concept, term, axiom or ontology in the surface syntax

    Axioms carry the terminating '.', ontologies render one axiom per line.
    """
    if isinstance(item, Ontology):
        return "\n".join(render(axiom) for axiom in item.axioms) + ("\n" if item.axioms else "")
    if isinstance(item, (CI, ConceptAssertion, RoleAssertion, TermEquality, NegatedFormula, Conjunction)):
        return _render_formula(item) + "."
    if isinstance(item, (Individual, Iota)):
        return render_term(item)
    if isinstance(item, (list, tuple)):
        return "\n".join(render(member) for member in item)
    return render_concept(item)
