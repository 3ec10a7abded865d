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
Partial Interpretations

Finite interpretations whose individual map may be partial, the evaluation
of terms, concepts and axioms over them, and the standard translation of
concepts into first-order formulas with a negative-semantics evaluator.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from freedl.common.errors import DialectError, InterpretationError
from freedl.syntax import (
    CI,
    And,
    Bot,
    Concept,
    ConceptAssertion,
    Conjunction,
    ExistenceTop,
    Exists,
    Individual,
    Name,
    NegatedFormula,
    Nominal,
    Not,
    Ontology,
    RoleAssertion,
    Term,
    TermEquality,
    Top,
)

logger = logging.getLogger("flask.app")


######################################################################
#  P A R T I A L   I N T E R P R E T A T I O N
######################################################################
@dataclass(frozen=True)
class PartialInterpretation:
    """
    A finite interpretation with a partial individual map

    Concept and role names missing from the maps denote the empty set;
    individuals missing from the map do not denote.
    """

    domain: Tuple[str, ...]
    concepts: Mapping[str, FrozenSet[str]] = field(default_factory=dict)
    roles: Mapping[str, FrozenSet[Tuple[str, str]]] = field(default_factory=dict)
    individuals: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.domain:
            raise InterpretationError("the domain must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise InterpretationError("duplicate element ids in the domain")
        known = set(self.domain)
        for name, extension in self.concepts.items():
            unknown = set(extension) - known
            if unknown:
                raise InterpretationError(f"concept {name} uses unknown elements {sorted(unknown)}")
        for name, pairs in self.roles.items():
            if name == "u":
                raise InterpretationError("the universal role is not stored")
            for pair in pairs:
                if len(pair) != 2 or pair[0] not in known or pair[1] not in known:
                    raise InterpretationError(f"role {name} uses unknown elements {list(pair)}")
        for name, element in self.individuals.items():
            if element not in known:
                raise InterpretationError(f"individual {name} maps to unknown element {element}")

    @cached_property
    def elements(self) -> FrozenSet[str]:
        """The domain as a set"""
        return frozenset(self.domain)

    @cached_property
    def successors(self) -> Dict[str, Dict[str, FrozenSet[str]]]:
        """role -> element -> r-successors"""
        table: Dict[str, Dict[str, set]] = {}
        for name, pairs in self.roles.items():
            row = table.setdefault(name, {})
            for source, target in pairs:
                row.setdefault(source, set()).add(target)
        return {name: {d: frozenset(s) for d, s in row.items()} for name, row in table.items()}

    def extension_of(self, name: str) -> FrozenSet[str]:
        """Extension of a concept name"""
        return frozenset(self.concepts.get(name, ()))

    def successors_of(self, role: str, element: str) -> FrozenSet[str]:
        """r-successors of an element"""
        return self.successors.get(role, {}).get(element, frozenset())

    ##################################################
    # JSON interchange
    ##################################################
    def to_dict(self) -> dict:
        """Serializes into the JSON interpretation format"""
        return {
            "domain": list(self.domain),
            "concepts": {name: sorted(ext) for name, ext in sorted(self.concepts.items())},
            "roles": {name: sorted([list(p) for p in pairs]) for name, pairs in sorted(self.roles.items())},
            "individuals": dict(sorted(self.individuals.items())),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PartialInterpretation":
        """Deserializes from the JSON interpretation format"""
        try:
            domain = tuple(str(d) for d in data["domain"])
            concepts = {str(k): frozenset(str(d) for d in v) for k, v in data.get("concepts", {}).items()}
            roles = {
                str(k): frozenset((str(p[0]), str(p[1])) for p in v) for k, v in data.get("roles", {}).items()
            }
            individuals = {str(k): str(v) for k, v in data.get("individuals", {}).items()}
        except KeyError as error:
            raise InterpretationError("Invalid interpretation: missing " + error.args[0]) from error
        except (TypeError, AttributeError, IndexError) as error:
            raise InterpretationError(f"Invalid interpretation: bad data {error}") from error
        return cls(domain, concepts, roles, individuals)

    @classmethod
    def from_json(cls, text: str) -> "PartialInterpretation":
        """Loads from JSON text"""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise InterpretationError(f"Invalid JSON: {error}") from error
        if not isinstance(data, dict):
            raise InterpretationError("Invalid interpretation: expected a JSON object")
        return cls.from_dict(data)

    def to_json(self) -> str:
        """Dumps to JSON text"""
        return json.dumps(self.to_dict(), indent=2)


######################################################################
#  E V A L U A T I O N
######################################################################
class Evaluator:
    """Memoizing evaluator of terms and concepts over one interpretation"""

    def __init__(self, interp: PartialInterpretation):
        self.interp = interp
        self._memo: Dict[Concept, FrozenSet[str]] = {}

    def term(self, term: Term) -> Optional[str]:
        """The value of a term, or None when it does not denote"""
        if isinstance(term, Individual):
            return self.interp.individuals.get(term.name)
        extension = self.concept(term.body)
        if len(extension) == 1:
            return next(iter(extension))
        return None

    def concept(self, concept: Concept) -> FrozenSet[str]:
        """The extension of a concept"""
        cached = self._memo.get(concept)
        if cached is not None:
            return cached
        result = self._evaluate(concept)
        self._memo[concept] = result
        return result

    def _evaluate(self, concept: Concept) -> FrozenSet[str]:
        interp = self.interp
        if isinstance(concept, Top):
            return interp.elements
        if isinstance(concept, Bot):
            return frozenset()
        if isinstance(concept, Name):
            return interp.extension_of(concept.name)
        if isinstance(concept, Nominal):
            value = self.term(concept.term)
            return frozenset() if value is None else frozenset((value,))
        if isinstance(concept, Not):
            return interp.elements - self.concept(concept.operand)
        if isinstance(concept, And):
            result = self.concept(concept.operands[0])
            for operand in concept.operands[1:]:
                result = result & self.concept(operand)
            return result
        if isinstance(concept, Exists):
            filler = self.concept(concept.filler)
            if concept.role.is_universal:
                return interp.elements if filler else frozenset()
            return frozenset(
                d for d in interp.domain if interp.successors_of(concept.role.name, d) & filler
            )
        if isinstance(concept, ExistenceTop):
            raise DialectError("the existence concept needs a dual-domain interpretation")
        raise TypeError(f"not a concept: {concept!r}")

    def axiom(self, axiom) -> bool:
        """Truth of an axiom or formula under partial semantics"""
        if isinstance(axiom, CI):
            return self.concept(axiom.lhs) <= self.concept(axiom.rhs)
        if isinstance(axiom, ConceptAssertion):
            value = self.term(axiom.term)
            return value is not None and value in self.concept(axiom.concept)
        if isinstance(axiom, RoleAssertion):
            subject, obj = self.term(axiom.subject), self.term(axiom.object)
            if subject is None or obj is None:
                return False
            return obj in self.interp.successors_of(axiom.role, subject)
        if isinstance(axiom, TermEquality):
            left, right = self.term(axiom.left), self.term(axiom.right)
            return left is not None and left == right
        if isinstance(axiom, NegatedFormula):
            return not self.axiom(axiom.formula)
        if isinstance(axiom, Conjunction):
            return all(self.axiom(formula) for formula in axiom.formulas)
        raise TypeError(f"not an axiom: {axiom!r}")


def term_value(interp: PartialInterpretation, term: Term) -> Optional[str]:
    """The element a term denotes, or None (undefined)"""
    return Evaluator(interp).term(term)


def concept_extension(interp: PartialInterpretation, concept: Concept) -> FrozenSet[str]:
    """C^I"""
    return Evaluator(interp).concept(concept)


def satisfies_axiom(interp: PartialInterpretation, axiom) -> bool:
    """I ⊨ α"""
    return Evaluator(interp).axiom(axiom)


def violated_axioms(interp: PartialInterpretation, ontology: Union[Ontology, Iterable]) -> List:
    """The axioms of the ontology that the interpretation falsifies"""
    evaluator = Evaluator(interp)
    return [axiom for axiom in ontology if not evaluator.axiom(axiom)]


def is_model(interp: PartialInterpretation, ontology: Union[Ontology, Iterable]) -> bool:
    """I ⊨ O"""
    failing = violated_axioms(interp, ontology)
    if failing:
        logger.debug("Interpretation violates %d axioms", len(failing))
    return not failing


######################################################################
#  F I R S T - O R D E R   F O R M U L A S
######################################################################
@dataclass(frozen=True)
class Var:
    """A first-order variable"""

    name: str


@dataclass(frozen=True)
class Const:
    """An individual constant (may not denote)"""

    name: str


FOTerm = Union[Var, Const]


@dataclass(frozen=True)
class Atom:
    """P(t) or r(t1, t2)"""

    predicate: str
    args: Tuple[FOTerm, ...]


@dataclass(frozen=True)
class Equals:
    """t1 = t2"""

    left: FOTerm
    right: FOTerm


@dataclass(frozen=True)
class FOTrue:
    """Verum"""


@dataclass(frozen=True)
class FOFalse:
    """Falsum"""


@dataclass(frozen=True)
class FONot:
    """Negation"""

    operand: "FOFormula"


@dataclass(frozen=True)
class FOAnd:
    """Conjunction"""

    operands: Tuple["FOFormula", ...]


@dataclass(frozen=True)
class FOImplies:
    """Implication"""

    left: "FOFormula"
    right: "FOFormula"


@dataclass(frozen=True)
class FOExists:
    """Existential quantifier"""

    var: Var
    body: "FOFormula"


@dataclass(frozen=True)
class FOForall:
    """Universal quantifier"""

    var: Var
    body: "FOFormula"


FOFormula = Union[Atom, Equals, FOTrue, FOFalse, FONot, FOAnd, FOImplies, FOExists, FOForall]


def _other(var: Var) -> Var:
    return Var("y") if var.name == "x" else Var("x")


def _term_equals(var: Var, term: Term) -> FOFormula:
    if isinstance(term, Individual):
        return Equals(var, Const(term.name))
    return _iota_formula(var, term.body)


def _iota_formula(var: Var, body: Concept) -> FOFormula:
    """∃x st_x(C) ∧ ∀x∀y(st_x(C) ∧ st_y(C) → x=y) ∧ ∀y(st_y(C) → x=y), x free"""
    other = _other(var)
    return FOAnd(
        (
            FOExists(var, standard_translation(body, var.name)),
            FOForall(
                var,
                FOForall(
                    other,
                    FOImplies(
                        FOAnd((standard_translation(body, var.name), standard_translation(body, other.name))),
                        Equals(var, other),
                    ),
                ),
            ),
            FOForall(other, FOImplies(standard_translation(body, other.name), Equals(var, other))),
        )
    )


def standard_translation(concept: Concept, var: str = "x") -> FOFormula:
    """st_x(C): a two-variable first-order formula with exactly var free"""
    x = Var(var)
    y = _other(x)
    if isinstance(concept, Top):
        return FOTrue()
    if isinstance(concept, Bot):
        return FOFalse()
    if isinstance(concept, Name):
        return Atom(concept.name, (x,))
    if isinstance(concept, Nominal):
        return _term_equals(x, concept.term)
    if isinstance(concept, Not):
        return FONot(standard_translation(concept.operand, var))
    if isinstance(concept, And):
        return FOAnd(tuple(standard_translation(op, var) for op in concept.operands))
    if isinstance(concept, Exists):
        filler = standard_translation(concept.filler, y.name)
        if concept.role.is_universal:
            return FOExists(y, filler)
        return FOExists(y, FOAnd((Atom(concept.role.name, (x, y)), filler)))
    raise DialectError(f"no standard translation for {concept!r}")


def fo_holds(interp: PartialInterpretation, formula: FOFormula, assignment: Mapping[str, str]) -> bool:
    """
    Negative semantics: an atom or equality holds only when all of its
    terms denote; quantifiers range over the domain
    """

    def value(term: FOTerm, env) -> Optional[str]:
        if isinstance(term, Var):
            return env[term.name]
        return interp.individuals.get(term.name)

    def holds(phi, env) -> bool:
        if isinstance(phi, FOTrue):
            return True
        if isinstance(phi, FOFalse):
            return False
        if isinstance(phi, Atom):
            values = [value(t, env) for t in phi.args]
            if any(v is None for v in values):
                return False
            if len(values) == 1:
                return values[0] in interp.extension_of(phi.predicate)
            return values[1] in interp.successors_of(phi.predicate, values[0])
        if isinstance(phi, Equals):
            left, right = value(phi.left, env), value(phi.right, env)
            return left is not None and left == right
        if isinstance(phi, FONot):
            return not holds(phi.operand, env)
        if isinstance(phi, FOAnd):
            return all(holds(op, env) for op in phi.operands)
        if isinstance(phi, FOImplies):
            return not holds(phi.left, env) or holds(phi.right, env)
        if isinstance(phi, FOExists):
            return any(holds(phi.body, {**env, phi.var.name: d}) for d in interp.domain)
        if isinstance(phi, FOForall):
            return all(holds(phi.body, {**env, phi.var.name: d}) for d in interp.domain)
        raise TypeError(f"not a formula: {phi!r}")

    return holds(formula, dict(assignment))


######################################################################
#  F O   R E N D E R I N G
######################################################################
_ATOMIC, _AND, _IMPLIES = 3, 2, 1


def _level(phi) -> int:
    if isinstance(phi, FOAnd):
        return _AND
    if isinstance(phi, FOImplies):
        return _IMPLIES
    return _ATOMIC


def _fo_term(term: FOTerm) -> str:
    return term.name


def render_fo(phi: FOFormula) -> str:
    """Renders a formula with ∧ binding tighter than →"""
    if isinstance(phi, FOTrue):
        return "⊤"
    if isinstance(phi, FOFalse):
        return "⊥"
    if isinstance(phi, Atom):
        return f"{phi.predicate}({','.join(_fo_term(t) for t in phi.args)})"
    if isinstance(phi, Equals):
        return f"{_fo_term(phi.left)}={_fo_term(phi.right)}"
    if isinstance(phi, FONot):
        inner = render_fo(phi.operand)
        return "¬" + (inner if _level(phi.operand) == _ATOMIC else f"({inner})")
    if isinstance(phi, FOAnd):
        parts = [render_fo(op) if _level(op) > _AND else f"({render_fo(op)})" for op in phi.operands]
        return " ∧ ".join(parts)
    if isinstance(phi, FOImplies):
        left = render_fo(phi.left) if _level(phi.left) > _IMPLIES else f"({render_fo(phi.left)})"
        return f"{left} → {render_fo(phi.right)}"
    if isinstance(phi, (FOExists, FOForall)):
        symbol = "∃" if isinstance(phi, FOExists) else "∀"
        body = phi.body
        if isinstance(body, (FOExists, FOForall)):
            return f"{symbol}{phi.var.name}{render_fo(body)}"
        if isinstance(body, (Atom, Equals, FONot, FOTrue, FOFalse)):
            return f"{symbol}{phi.var.name} {render_fo(body)}"
        return f"{symbol}{phi.var.name}({render_fo(body)})"
    raise TypeError(f"not a formula: {phi!r}")

