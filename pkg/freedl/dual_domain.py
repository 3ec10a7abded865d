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
Dual-Domain Semantics for ALCOι*

A dual-domain interpretation has an outer domain of possible objects and a
proper inner subset of existing ones. Individuals always denote an outer
element; a definite description denotes the unique inner instance of its
body, else a fallback outside the inner domain. Formulas are satisfied under
positive semantics (atoms may hold of outer elements) or negative semantics
(atoms require existence).

Satisfiability reduces to ALCOuι on partial interpretations through the
existence relativization C↓Ex and the formula translations φ+ / φ-.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from freedl.alcou_sat import alcouiota_sat
from freedl.common.errors import DialectError, InterpretationError
from freedl.normalize import eliminate_assertions
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
    Individual,
    Iota,
    Name,
    NegatedFormula,
    Nominal,
    Not,
    Ontology,
    Or,
    Role,
    RoleAssertion,
    Term,
    TermEquality,
    Top,
    equivalence,
    fresh_name,
    hashed_individual_name,
    iota_terms,
    render_term,
    signature_of,
    unique,
)
from freedl.translate import internalize

logger = logging.getLogger("flask.app")

POSITIVE = "+"
NEGATIVE = "-"
_POLARITIES = {"+": POSITIVE, "pos": POSITIVE, "positive": POSITIVE, "-": NEGATIVE, "neg": NEGATIVE, "negative": NEGATIVE}


def polarity_of(text: str) -> str:
    """Normalizes '+', 'pos', '-', 'neg' and friends"""
    try:
        return _POLARITIES[text.strip().lower()]
    except KeyError as error:
        raise ValueError(f"unknown polarity {text}") from error


######################################################################
#  D U A L - D O M A I N   I N T E R P R E T A T I O N
######################################################################
@dataclass(frozen=True)
class DualDomainInterpretation:
    """Outer domain, inner domain, extensions, a total individual map and ι fallbacks"""

    # pylint: disable=too-many-instance-attributes

    outer: Tuple[str, ...]
    inner: FrozenSet[str] = frozenset()
    concepts: Mapping[str, FrozenSet[str]] = field(default_factory=dict)
    roles: Mapping[str, FrozenSet[Tuple[str, str]]] = field(default_factory=dict)
    individuals: Mapping[str, str] = field(default_factory=dict)
    iota_fallback: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.outer:
            raise InterpretationError("the outer domain must be nonempty")
        if len(set(self.outer)) != len(self.outer):
            raise InterpretationError("duplicate element ids in the outer domain")
        known = set(self.outer)
        if not set(self.inner) < known:
            raise InterpretationError("the inner domain must be a proper subset of the outer domain")
        for name, extension in self.concepts.items():
            if not set(extension) <= known:
                raise InterpretationError(f"concept {name} uses unknown elements")
        for name, pairs in self.roles.items():
            if any(d not in known or e not in known for d, e in pairs):
                raise InterpretationError(f"role {name} uses unknown elements")
        for name, element in self.individuals.items():
            if element not in known:
                raise InterpretationError(f"individual {name} maps to unknown element {element}")
        for term, element in self.iota_fallback.items():
            if element not in known or element in self.inner:
                raise InterpretationError(f"fallback for {term} must be an outer element outside the inner domain")

    @cached_property
    def default_fallback(self) -> str:
        """The least outer element outside the inner domain"""
        return next(d for d in self.outer if d not in self.inner)

    def fallback(self, term: Iota) -> str:
        """d_ιC for a definite description"""
        return self.iota_fallback.get(render_term(term), self.default_fallback)

    def to_dict(self) -> dict:
        """Serializes into the dual-domain JSON format"""
        return {
            "domain": list(self.outer),
            "inner": sorted(self.inner),
            "concepts": {name: sorted(ext) for name, ext in sorted(self.concepts.items())},
            "roles": {name: sorted([list(p) for p in pairs]) for name, pairs in sorted(self.roles.items())},
            "individuals": dict(sorted(self.individuals.items())),
            "iotaFallback": dict(sorted(self.iota_fallback.items())),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DualDomainInterpretation":
        """Deserializes; 'domain' is the outer domain"""
        try:
            return cls(
                tuple(str(d) for d in data["domain"]),
                frozenset(str(d) for d in data.get("inner", [])),
                {str(k): frozenset(str(d) for d in v) for k, v in data.get("concepts", {}).items()},
                {str(k): frozenset((str(p[0]), str(p[1])) for p in v) for k, v in data.get("roles", {}).items()},
                {str(k): str(v) for k, v in data.get("individuals", {}).items()},
                {str(k): str(v) for k, v in data.get("iotaFallback", {}).items()},
            )
        except KeyError as error:
            raise InterpretationError("Invalid interpretation: missing " + error.args[0]) from error
        except (TypeError, AttributeError, IndexError) as error:
            raise InterpretationError(f"Invalid interpretation: bad data {error}") from error

    @classmethod
    def from_json(cls, text: str) -> "DualDomainInterpretation":
        """Loads from JSON text"""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise InterpretationError(f"Invalid JSON: {error}") from error
        if not isinstance(data, dict):
            raise InterpretationError("Invalid interpretation: expected a JSON object")
        return cls.from_dict(data)


class DualDomainEvaluator:
    """Memoizing evaluator of ALCOι* terms, concepts and formulas"""

    def __init__(self, interp: DualDomainInterpretation):
        self.interp = interp
        self.outer = frozenset(interp.outer)
        self._cache: Dict[Concept, FrozenSet[str]] = {}

    def term(self, term: Term) -> str:
        """τ^I, always an outer element"""
        if isinstance(term, Individual):
            try:
                return self.interp.individuals[term.name]
            except KeyError as error:
                raise InterpretationError(f"individual {term.name} is not interpreted") from error
        existing = self.interp.inner & self.concept(term.body)
        if len(existing) == 1:
            return next(iter(existing))
        return self.interp.fallback(term)

    def concept(self, concept: Concept) -> FrozenSet[str]:
        """C^I"""
        cached = self._cache.get(concept)
        if cached is None:
            cached = self._concept(concept)
            self._cache[concept] = cached
        return cached

    def _concept(self, concept: Concept) -> FrozenSet[str]:
        # pylint: disable=too-many-return-statements
        if isinstance(concept, Top):
            return self.outer
        if isinstance(concept, Bot):
            return frozenset()
        if isinstance(concept, ExistenceTop):
            return self.interp.inner
        if isinstance(concept, Name):
            return frozenset(self.interp.concepts.get(concept.name, ()))
        if isinstance(concept, Nominal):
            return frozenset({self.term(concept.term)})
        if isinstance(concept, Not):
            return self.outer - self.concept(concept.operand)
        if isinstance(concept, And):
            result = self.outer
            for operand in concept.operands:
                result &= self.concept(operand)
            return result
        if isinstance(concept, Exists):
            if concept.role.is_universal:
                raise DialectError("the universal role is not part of ALCOι*")
            targets = self.interp.inner & self.concept(concept.filler)
            pairs = self.interp.roles.get(concept.role.name, frozenset())
            return frozenset(d for d, e in pairs if e in targets)
        raise TypeError(f"not a concept: {concept!r}")

    def formula(self, formula, polarity: str) -> bool:
        """I ⊨+ φ or I ⊨- φ"""
        # pylint: disable=too-many-return-statements
        negative = polarity_of(polarity) == NEGATIVE
        inner = self.interp.inner
        if isinstance(formula, CI):
            return not (inner & self.concept(formula.lhs)) - self.concept(formula.rhs)
        if isinstance(formula, ConceptAssertion):
            value = self.term(formula.term)
            return value in self.concept(formula.concept) and (not negative or value in inner)
        if isinstance(formula, RoleAssertion):
            subject, obj = self.term(formula.subject), self.term(formula.object)
            related = (subject, obj) in self.interp.roles.get(formula.role, frozenset())
            return related and (not negative or (subject in inner and obj in inner))
        if isinstance(formula, TermEquality):
            left, right = self.term(formula.left), self.term(formula.right)
            return left == right and (not negative or left in inner)
        if isinstance(formula, NegatedFormula):
            return not self.formula(formula.formula, polarity)
        if isinstance(formula, Conjunction):
            return all(self.formula(part, polarity) for part in formula.formulas)
        if isinstance(formula, Ontology):
            return all(self.formula(part, polarity) for part in formula)
        raise TypeError(f"not a formula: {formula!r}")


def dd_concept_extension(interp: DualDomainInterpretation, concept: Concept) -> FrozenSet[str]:
    """Extension of an ALCOι* concept"""
    return DualDomainEvaluator(interp).concept(concept)


def dd_satisfies(interp: DualDomainInterpretation, formula, polarity: str) -> bool:
    """Satisfaction under positive ('+') or negative ('-') semantics"""
    return DualDomainEvaluator(interp).formula(formula, polarity)


######################################################################
#  T R A N S L A T I O N   T O   P A R T I A L   I N T E R P R E T A T I O N S
######################################################################
class _Relativizer:
    """C↓Ex with one fresh fallback individual per definite description"""

    def __init__(self, existence: Name, fallbacks: Mapping[Iota, Individual]):
        self.existence = existence
        self.fallbacks = fallbacks

    def concept(self, concept: Concept) -> Concept:
        # pylint: disable=too-many-return-statements
        if isinstance(concept, (Top, Bot, Name)):
            return concept
        if isinstance(concept, ExistenceTop):
            return self.existence
        if isinstance(concept, Not):
            return Not(self.concept(concept.operand))
        if isinstance(concept, And):
            return And(tuple(self.concept(op) for op in concept.operands))
        if isinstance(concept, Exists):
            if concept.role.is_universal:
                raise DialectError("the universal role is not part of ALCOι*")
            return Exists(concept.role, And((self.existence, self.concept(concept.filler))))
        if isinstance(concept, Nominal):
            return self.nominal(concept.term)
        raise TypeError(f"not a concept: {concept!r}")

    def nominal(self, term: Term) -> Concept:
        """{τ}↓Ex"""
        if isinstance(term, Individual):
            return Nominal(term)
        guarded = Nominal(Iota(And((self.existence, self.concept(term.body)))))
        missing = Not(Exists(UNIVERSAL, guarded))
        return Or(guarded, And((missing, Nominal(self.fallbacks[term]))))

    def formula(self, formula, polarity: str):
        """φ+ or φ-"""
        # pylint: disable=too-many-return-statements
        negative = polarity == NEGATIVE
        ex = self.existence
        if isinstance(formula, CI):
            return CI(And((ex, self.concept(formula.lhs))), self.concept(formula.rhs))
        if isinstance(formula, ConceptAssertion):
            rhs = self.concept(formula.concept)
            return CI(self.nominal(formula.term), And((ex, rhs)) if negative else rhs)
        if isinstance(formula, RoleAssertion):
            role = Exists(Role(formula.role), self.nominal(formula.object))
            if negative:
                role = And((ex, Exists(Role(formula.role), And((ex, self.nominal(formula.object))))))
            return CI(self.nominal(formula.subject), role)
        if isinstance(formula, TermEquality):
            left, right = self.nominal(formula.left), self.nominal(formula.right)
            if negative:
                # both values exist and coincide
                return CI(left, And((ex, right)))
            return Conjunction(equivalence(left, right))
        if isinstance(formula, NegatedFormula):
            return NegatedFormula(self.formula(formula.formula, polarity))
        if isinstance(formula, Conjunction):
            return Conjunction(tuple(self.formula(part, polarity) for part in formula.formulas))
        raise TypeError(f"not a formula: {formula!r}")


def _conjuncts(formula) -> List:
    if isinstance(formula, (Ontology, list, tuple)):
        parts = []
        for item in formula:
            parts.extend(_conjuncts(item))
        return parts
    if isinstance(formula, Conjunction):
        return _conjuncts(list(formula.formulas))
    return [formula]


def encode_formula(formula) -> List[CI]:
    """CIs holding in exactly the partial interpretations satisfying an ALCOuι formula"""
    axioms: List[CI] = []
    for part in _conjuncts(formula):
        if isinstance(part, (CI, ConceptAssertion, RoleAssertion)):
            axioms.extend(eliminate_assertions(Ontology(Dialect.ALCO, (part,))).cis)
        elif isinstance(part, NegatedFormula) and isinstance(part.formula, ConceptAssertion):
            term = Nominal(part.formula.term)
            absent = Forall(UNIVERSAL, Not(term))
            outside = Exists(UNIVERSAL, And((term, Not(part.formula.concept))))
            axioms.append(CI(Top(), Or(absent, outside)))
        else:
            axioms.append(CI(Top(), internalize(part)))
    return list(unique(axioms))


def boxcircle_translate(formula, polarity: str) -> Ontology:
    """
    φ⊞: an ALCOuι ontology satisfiable on partial interpretations iff φ is
    satisfiable on dual-domain interpretations under the given polarity
    """
    polarity = polarity_of(polarity)
    signature = signature_of(formula)
    existence = Name(fresh_name("Ex", signature.concepts))
    taken = set(signature.individuals)
    fallbacks: Dict[Iota, Individual] = {}
    for term in sorted(iota_terms(formula), key=render_term):
        name = hashed_individual_name("dd", term, taken)
        taken.add(name)
        fallbacks[term] = Individual(name)

    relativizer = _Relativizer(existence, fallbacks)
    parts = [relativizer.formula(part, polarity) for part in _conjuncts(formula)]
    parts.extend(ConceptAssertion(Top(), Individual(a)) for a in sorted(signature.individuals))
    parts.extend(ConceptAssertion(Not(existence), fallbacks[term]) for term in sorted(fallbacks, key=render_term))
    result = Ontology(Dialect.ALCO, tuple(encode_formula(parts)))
    logger.debug("Dual-domain translation (%s): %d CIs", polarity, len(result))
    return result


def dd_sat(formula, polarity: str, route: Optional[str] = None, max_types: Optional[int] = None) -> bool:
    """Satisfiability on dual-domain interpretations, via φ⊞"""
    translated = boxcircle_translate(formula, polarity)
    verdict = alcouiota_sat(translated, mode="partial", route=route, max_types=max_types)
    logger.info("Dual-domain satisfiability (%s): %s", polarity_of(polarity), verdict)
    return verdict
