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
ALCOuι Satisfiability by Type Elimination

A type is a bitmask over the atoms of the closure (concept names, nominals
and existential restrictions); compound concepts are evaluated from the
atoms. Types are enumerated by depth-first search with the CIs and the
local conditions of ι-nominals and ∃u pruning early. Elimination removes
types whose ∃r.C obligations have no compatible witness; nominal and ι
conditions are then resolved by backtracking.

Surviving types are realized once when they contain a nominal (of an
individual or of a definite description) and twice otherwise, which gives
models over partial interpretations.
"""
import logging
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from freedl import config
from freedl.common.errors import DialectError, ResourceExceeded
from freedl.normalize import alco_normal_form, eliminate_assertions
from freedl.semantics import PartialInterpretation
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    Bot,
    Concept,
    ConceptAssertion,
    ExistenceTop,
    Exists,
    Individual,
    Iota,
    Name,
    Nominal,
    Not,
    Ontology,
    Top,
    render,
    signature_of,
    subconcepts,
)
from freedl.translate import add_denotation_axioms, dagger, internalize

logger = logging.getLogger("flask.app")

Predicate = Callable[[int], bool]


######################################################################
#  T Y P E   S P A C E
######################################################################
class TypeElimination:
    """
    Types of a set of CIs and the elimination procedure over them

    Extra concepts are added to the closure without being asserted, so
    callers can ask about them (for instance {a} and ¬{a} for mosaics).
    """

    # pylint: disable=too-many-instance-attributes

    def __init__(self, cis: Iterable[CI], extra: Iterable[Concept] = (), max_types: Optional[int] = None):
        self.cis = list(cis)
        self.max_types = max_types or config.MAX_TYPES
        closure = subconcepts(self.cis + list(extra))
        for concept in closure:
            if isinstance(concept, ExistenceTop):
                raise DialectError("the existence concept needs dual-domain semantics")
        self.closure = sorted(closure, key=render)
        self.atoms: List[Concept] = [c for c in self.closure if isinstance(c, (Name, Nominal, Exists))]
        self.index: Dict[Concept, int] = {atom: i for i, atom in enumerate(self.atoms)}
        self._compiled: Dict[Concept, Predicate] = {}

        self.role_masks: Dict[str, int] = {}
        self.universal_mask = 0
        self.nominal_atoms: List[int] = []
        self.iota_atoms: List[Tuple[int, Predicate]] = []
        self.singleton_mask = 0
        for i, atom in enumerate(self.atoms):
            if isinstance(atom, Exists):
                if atom.role.is_universal:
                    self.universal_mask |= 1 << i
                else:
                    self.role_masks[atom.role.name] = self.role_masks.get(atom.role.name, 0) | 1 << i
            elif isinstance(atom, Nominal):
                self.singleton_mask |= 1 << i
                if isinstance(atom.term, Individual):
                    self.nominal_atoms.append(i)
                else:
                    self.iota_atoms.append((i, self.compile(atom.term.body)))

        self.types: List[int] = self._enumerate()
        self._forced: Dict[str, List[int]] = {
            role: [self._forced_mask(role, t) for t in self.types] for role in self.role_masks
        }
        logger.info("Type elimination: %d atoms, %d types", len(self.atoms), len(self.types))

    ##################################################
    # Concept compilation
    ##################################################
    def compile(self, concept: Concept) -> Predicate:
        """A predicate deciding concept membership of a type"""
        compiled = self._compiled.get(concept)
        if compiled is not None:
            return compiled
        if isinstance(concept, Top):
            compiled = lambda t: True  # noqa: E731
        elif isinstance(concept, Bot):
            compiled = lambda t: False  # noqa: E731
        elif isinstance(concept, (Name, Nominal, Exists)):
            bit = 1 << self.index[concept]
            compiled = lambda t: bool(t & bit)  # noqa: E731
        elif isinstance(concept, Not):
            operand = self.compile(concept.operand)
            compiled = lambda t: not operand(t)  # noqa: E731
        elif isinstance(concept, And):
            operands = [self.compile(op) for op in concept.operands]
            compiled = lambda t: all(op(t) for op in operands)  # noqa: E731
        else:
            raise DialectError(f"unsupported concept {render(concept)}")
        self._compiled[concept] = compiled
        return compiled

    def holds(self, concept: Concept, type_mask: int) -> bool:
        """concept ∈ type"""
        return self.compile(concept)(type_mask)

    def _dependencies(self, concept: Concept) -> Set[int]:
        if isinstance(concept, (Name, Nominal, Exists)):
            return {self.index[concept]}
        if isinstance(concept, Not):
            return self._dependencies(concept.operand)
        if isinstance(concept, And):
            deps: Set[int] = set()
            for operand in concept.operands:
                deps |= self._dependencies(operand)
            return deps
        return set()

    ##################################################
    # Type enumeration
    ##################################################
    def _constraints(self) -> List[Tuple[Predicate, Set[int]]]:
        constraints = []
        for ci in self.cis:
            lhs, rhs = self.compile(ci.lhs), self.compile(ci.rhs)
            constraints.append(
                (lambda t, lhs=lhs, rhs=rhs: not lhs(t) or rhs(t), self._dependencies(ci.lhs) | self._dependencies(ci.rhs))
            )
        for i, atom in enumerate(self.atoms):
            bit = 1 << i
            if isinstance(atom, Nominal) and isinstance(atom.term, Iota):
                body = self.compile(atom.term.body)
                depends = {i} | self._dependencies(atom.term.body)
                constraints.append((lambda t, bit=bit, body=body: not t & bit or body(t), depends))
            elif isinstance(atom, Exists):
                filler = self.compile(atom.filler)
                if isinstance(atom.filler, Bot):
                    constraints.append((lambda t, bit=bit: not t & bit, {i}))
                elif atom.role.is_universal:
                    deps = {i} | self._dependencies(atom.filler)
                    constraints.append((lambda t, bit=bit, filler=filler: bool(t & bit) or not filler(t), deps))
        return constraints

    def _enumerate(self) -> List[int]:
        constraints = self._constraints()
        order: List[int] = []
        seen: Set[int] = set()
        for _, deps in constraints:
            for dep in sorted(deps):
                if dep not in seen:
                    seen.add(dep)
                    order.append(dep)
        order.extend(i for i in range(len(self.atoms)) if i not in seen)
        position = {atom: pos for pos, atom in enumerate(order)}

        checks: List[List[Predicate]] = [[] for _ in order]
        for predicate, deps in constraints:
            if not deps:
                if not predicate(0):
                    return []
                continue
            checks[max(position[d] for d in deps)].append(predicate)

        types: List[int] = []
        limit = self.max_types

        def search(pos: int, mask: int) -> None:
            if pos == len(order):
                types.append(mask)
                if len(types) > limit:
                    raise ResourceExceeded(f"more than {limit} types")
                return
            for candidate in (mask, mask | 1 << order[pos]):
                if all(check(candidate) for check in checks[pos]):
                    search(pos + 1, candidate)

        search(0, 0)
        return types

    def _forced_mask(self, role: str, type_mask: int) -> int:
        """The ∃role.D atoms whose filler D holds in type_mask"""
        forced = 0
        mask = self.role_masks[role]
        i = 0
        while mask:
            if mask & 1:
                atom = self.atoms[i]
                if self.compile(atom.filler)(type_mask):
                    forced |= 1 << i
            mask >>= 1
            i += 1
        return forced

    ##################################################
    # Queries over types
    ##################################################
    def compatible(self, role: str, source: int, target: int) -> bool:
        """The types may be joined by a role edge (indices into types)"""
        if role not in self._forced:
            return True
        return not self._forced[role][target] & ~self.types[source]

    def forced(self, role: str, index: int) -> int:
        """The ∃role.D atoms a predecessor of the type must contain"""
        if role not in self._forced:
            return 0
        return self._forced[role][index]

    def is_singleton(self, index: int) -> bool:
        """The type contains a nominal and is realized exactly once"""
        return bool(self.types[index] & self.singleton_mask)

    def universal_profile(self, index: int) -> int:
        """The ∃u atoms of a type"""
        return self.types[index] & self.universal_mask

    def profiles(self) -> Dict[int, List[int]]:
        """Type indices grouped by their ∃u atoms"""
        groups: Dict[int, List[int]] = {}
        for index in range(len(self.types)):
            groups.setdefault(self.universal_profile(index), []).append(index)
        return groups

    def describe(self, index: int) -> List[str]:
        """The atoms of a type, rendered"""
        return [render(atom) for i, atom in enumerate(self.atoms) if self.types[index] >> i & 1]

    ##################################################
    # Elimination
    ##################################################
    def witnessed(self, alive: Iterable[int]) -> Set[int]:
        """Greatest subset whose ∃r.C obligations are met inside it"""
        alive = set(alive)
        while alive:
            removed = set()
            for role, mask in self.role_masks.items():
                forced = self._forced[role]
                available = {forced[t] for t in alive}
                for t in alive:
                    obligations = self.types[t] & mask
                    if not obligations:
                        continue
                    covered = 0
                    for candidate in available:
                        if not candidate & ~self.types[t]:
                            covered |= candidate
                    if obligations & ~covered:
                        removed.add(t)
            if not removed:
                break
            alive -= removed
        return alive

    def universal_ok(self, alive: Set[int]) -> bool:
        """Every ∃u.C of the (shared) profile has a C-type"""
        if not alive:
            return False
        profile = self.universal_profile(next(iter(alive)))
        i = 0
        mask = profile
        while mask:
            if mask & 1:
                filler = self.compile(self.atoms[i].filler)
                if not any(filler(self.types[t]) for t in alive):
                    return False
            mask >>= 1
            i += 1
        return True

    def search(self, required: Iterable[int] = ()) -> Optional[FrozenSet[int]]:
        """A set of types realizable as a model containing the required types, or None"""
        required = frozenset(required)
        groups = self.profiles()
        if required:
            profiles = {self.universal_profile(t) for t in required}
            if len(profiles) != 1:
                return None
            candidates = [groups[profiles.pop()]]
        else:
            candidates = [groups[key] for key in sorted(groups)]
        for group in candidates:
            result = self._search(frozenset(group), required)
            if result is not None:
                return result
        return None

    def realizable(self, required: Iterable[int]) -> bool:
        """Some model realizes all the required types"""
        return self.search(required) is not None

    def _branch(self, alive: FrozenSet[int], required: FrozenSet[int], clash: List[int]) -> Optional[FrozenSet[int]]:
        """Keeps one of the clashing types or none of them"""
        pinned = [t for t in clash if t in required]
        if len(pinned) > 1:
            return None
        options = pinned or clash
        for keep in options:
            result = self._search(alive - (frozenset(clash) - {keep}), required)
            if result is not None:
                return result
        if pinned:
            return None
        return self._search(alive - frozenset(clash), required)

    def _search(self, alive: FrozenSet[int], required: FrozenSet[int]) -> Optional[FrozenSet[int]]:
        # pylint: disable=too-many-return-statements
        alive = frozenset(self.witnessed(alive))
        if not required <= alive or not self.universal_ok(alive):
            return None
        for i in self.nominal_atoms:
            holders = [t for t in sorted(alive) if self.types[t] >> i & 1]
            if len(holders) > 1:
                return self._branch(alive, required, holders)
        for i, body in self.iota_atoms:
            holders = [t for t in sorted(alive) if self.types[t] >> i & 1]
            if len(holders) > 1:
                return self._branch(alive, required, holders)
            members = [t for t in sorted(alive) if body(self.types[t])]
            if len(holders) == 1:
                others = frozenset(members) - set(holders)
                if others:
                    if not others & required:
                        result = self._search(alive - others, required)
                        if result is not None:
                            return result
                    if holders[0] in required:
                        return None
                    return self._search(alive - set(holders), required)
            elif len(members) == 1 and self.is_singleton(members[0]):
                if members[0] in required:
                    return None
                return self._search(alive - set(members), required)
        return alive

    ##################################################
    # Model construction
    ##################################################
    def model(self, alive: Iterable[int], signature=None) -> PartialInterpretation:
        """Realizes a good set of types as a partial interpretation"""
        alive = sorted(alive)
        elements: Dict[int, List[str]] = {}
        domain: List[str] = []
        for t in alive:
            copies = 1 if self.is_singleton(t) else 2
            elements[t] = [f"d{len(domain) + k}" for k in range(copies)]
            domain.extend(elements[t])

        concepts: Dict[str, Set[str]] = {}
        individuals: Dict[str, str] = {}
        for i, atom in enumerate(self.atoms):
            if isinstance(atom, Name):
                concepts[atom.name] = {d for t in alive if self.types[t] >> i & 1 for d in elements[t]}
            elif isinstance(atom, Nominal) and isinstance(atom.term, Individual):
                for t in alive:
                    if self.types[t] >> i & 1:
                        individuals[atom.term.name] = elements[t][0]
        roles: Dict[str, Set[Tuple[str, str]]] = {}
        for role in self.role_masks:
            roles[role] = {
                (d, e)
                for s in alive
                for t in alive
                if self.compatible(role, s, t)
                for d in elements[s]
                for e in elements[t]
            }
        if signature is not None:
            for name in signature.concepts:
                concepts.setdefault(name, set())
        return PartialInterpretation(
            tuple(domain),
            {name: frozenset(ext) for name, ext in concepts.items()},
            {name: frozenset(pairs) for name, pairs in roles.items()},
            individuals,
        )


######################################################################
#  P U B L I C   E N T R Y   P O I N T S
######################################################################
def _prepare(ontology: Ontology, mode: str) -> Ontology:
    if mode not in ("partial", "total"):
        raise ValueError(f"unknown interpretation mode {mode}")
    prepared = eliminate_assertions(ontology)
    if mode == "total":
        prepared = add_denotation_axioms(prepared)
    return prepared


def alcou_total_sat(ontology: Ontology, max_types: Optional[int] = None) -> bool:
    """Satisfiability of an ι-free ALCOu ontology on total interpretations"""
    for concept in subconcepts(ontology):
        if isinstance(concept, Nominal) and isinstance(concept.term, Iota):
            raise DialectError("definite descriptions present: apply the dagger translation first")
    prepared = add_denotation_axioms(eliminate_assertions(ontology))
    engine = TypeElimination(prepared.cis, max_types=max_types)
    verdict = engine.search() is not None
    logger.info("ALCOu total satisfiability: %s", verdict)
    return verdict


def alcouiota_sat(
    ontology: Ontology,
    mode: str = "partial",
    route: Optional[str] = None,
    max_types: Optional[int] = None,
) -> bool:
    """
    Satisfiability of an ALCOuι ontology on partial or total interpretations

    route "translation" runs eliminate_assertions, denotation axioms (total
    mode), the ALCO normal form and the dagger translation before deciding
    total satisfiability; route "direct" decides over partial types.
    """
    route = route or config.SAT_ROUTE
    prepared = _prepare(ontology, mode)
    if route == "translation":
        verdict = alcou_total_sat(dagger(alco_normal_form(prepared)), max_types=max_types)
    elif route == "direct":
        verdict = TypeElimination(prepared.cis, max_types=max_types).search() is not None
    else:
        raise ValueError(f"unknown satisfiability route {route}")
    logger.info("ALCOuι %s satisfiability (%s route): %s", mode, route, verdict)
    return verdict


def alcouiota_model(
    ontology: Ontology, mode: str = "partial", max_types: Optional[int] = None
) -> Optional[PartialInterpretation]:
    """A finite model of the ontology, or None when it is unsatisfiable"""
    prepared = _prepare(ontology, mode)
    engine = TypeElimination(prepared.cis, max_types=max_types)
    alive = engine.search()
    if alive is None:
        return None
    return engine.model(alive, signature_of(ontology))


def countermodel_axioms(axiom) -> List[CI]:
    """CIs whose models are exactly the interpretations falsifying axiom"""
    if isinstance(axiom, CI):
        return [CI(Top(), Exists(UNIVERSAL, And((axiom.lhs, Not(axiom.rhs)))))]
    if isinstance(axiom, ConceptAssertion):
        # either τ does not denote or it denotes outside C
        missing = Not(Exists(UNIVERSAL, Nominal(axiom.term)))
        outside = Exists(UNIVERSAL, And((Nominal(axiom.term), Not(axiom.concept))))
        return [CI(Top(), Not(And((Not(missing), Not(outside)))))]
    return [CI(Top(), Not(internalize(axiom)))]


def alcouiota_entail(
    ontology: Ontology,
    axiom,
    mode: str = "partial",
    route: Optional[str] = None,
    max_types: Optional[int] = None,
) -> bool:
    """O ⊨ α, decided as unsatisfiability of O together with a countermodel condition"""
    route = route or config.ENTAIL_ROUTE
    extended = ontology.extend(countermodel_axioms(axiom))
    if mode == "total":
        # denotation is forced for the individuals of O and α alike
        extended = add_denotation_axioms(extended)
    verdict = not alcouiota_sat(extended, mode=mode, route=route, max_types=max_types)
    logger.info("Entailment of %s: %s", render(axiom), verdict)
    return verdict


def entail_all(ontology: Ontology, axioms: Sequence, **kwargs) -> bool:
    """O ⊨ α for every α"""
    return all(alcouiota_entail(ontology, axiom, **kwargs) for axiom in axioms)
