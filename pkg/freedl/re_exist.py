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
Referring Expression Existence

A referring expression (RE) for an individual a over a signature Σ is a
concept C using only Σ symbols with O ⊨ {a} ≡ C.

fo_re_exists        implicit definability: O ∪ O' ⊨ {a} ≡ {a'} where O'
                    renames every symbol outside Σ
elo_re_exists       the diagram method over the canonical model of {a}
alco_re_exists      joint consistency of O,{a} and O,¬{a} modulo
                    bisimulations, decided over sets of type-set pairs
enumerate_re        bounded generate and test
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from freedl import config
from freedl.alcou_sat import TypeElimination, alcouiota_entail, alcouiota_model
from freedl.common.errors import DialectError, ResourceExceeded, ShapeError, UndecidedRegime
from freedl.elo_engine import canonical_model, elo_entail, elo_model, saturate
from freedl.normalize import eliminate_assertions, elo_normal_form
from freedl.semantics import PartialInterpretation, concept_extension
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    Bot,
    Concept,
    ConceptAssertion,
    Dialect,
    Exists,
    Individual,
    Iota,
    Name,
    Nominal,
    Not,
    Ontology,
    Role,
    RoleAssertion,
    Signature,
    Term,
    Top,
    check_dialect,
    detect_dialect,
    equivalence,
    fresh_name,
    iota_nominal,
    nominal,
    render,
    role_depth,
    signature_of,
)

logger = logging.getLogger("flask.app")

LANGUAGES = ("fo", "elo", "alco")


def _require_individual(ontology: Ontology, individual: str) -> None:
    if individual not in signature_of(ontology).individuals:
        raise ShapeError(f"individual {individual} does not occur in the ontology")


def _entailment_for(ontology: Ontology) -> Callable:
    dialect = detect_dialect(ontology.axioms)
    if dialect == Dialect.ALCO_STAR:
        raise DialectError("referring expressions are defined for ELOuι and ALCOuι ontologies")
    return elo_entail if dialect == Dialect.ELO else alcouiota_entail


######################################################################
#  F O   ( I M P L I C I T   D E F I N A B I L I T Y )
######################################################################
class _Renamer:
    """Maps every symbol outside Σ to a fresh primed copy"""

    def __init__(self, ontology: Ontology, sigma: Signature):
        signature = signature_of(ontology)
        taken = set(signature.symbols())
        self.names: Dict[str, str] = {}
        for symbol in sorted(signature.symbols() - sigma.symbols()):
            primed = fresh_name(f"{symbol}'", taken)
            taken.add(primed)
            self.names[symbol] = primed

    def symbol(self, name: str) -> str:
        """The primed name, or the name itself for Σ symbols"""
        return self.names.get(name, name)

    def term(self, term: Term) -> Term:
        """Renamed individual or definite description"""
        if isinstance(term, Individual):
            return Individual(self.symbol(term.name))
        return Iota(self.concept(term.body))

    def concept(self, concept: Concept) -> Concept:
        """Renamed concept"""
        if isinstance(concept, Name):
            return Name(self.symbol(concept.name))
        if isinstance(concept, Nominal):
            return Nominal(self.term(concept.term))
        if isinstance(concept, Not):
            return Not(self.concept(concept.operand))
        if isinstance(concept, And):
            return And(tuple(self.concept(op) for op in concept.operands))
        if isinstance(concept, Exists):
            role = concept.role if concept.role.is_universal else Role(self.symbol(concept.role.name))
            return Exists(role, self.concept(concept.filler))
        return concept

    def axiom(self, axiom):
        """Renamed CI or assertion"""
        if isinstance(axiom, CI):
            return CI(self.concept(axiom.lhs), self.concept(axiom.rhs))
        if isinstance(axiom, ConceptAssertion):
            return ConceptAssertion(self.concept(axiom.concept), self.term(axiom.term))
        if isinstance(axiom, RoleAssertion):
            return RoleAssertion(self.symbol(axiom.role), self.term(axiom.subject), self.term(axiom.object))
        raise ShapeError(f"not an ontology axiom: {render(axiom)}")


def fo_re_exists(ontology: Ontology, individual: str, sigma: Signature) -> bool:
    """True iff an FO(Σ) referring expression for the individual exists under O"""
    _require_individual(ontology, individual)
    if individual in sigma.individuals:
        return True
    entail = _entailment_for(ontology)
    renamer = _Renamer(ontology, sigma)
    union = ontology.extend([renamer.axiom(axiom) for axiom in ontology])
    original = nominal(individual)
    primed = nominal(renamer.symbol(individual))
    verdict = entail(union, CI(original, primed)) and entail(union, CI(primed, original))
    logger.info("FO(%s) referring expression for %s: %s", sigma.listing(), individual, verdict)
    return verdict


######################################################################
#  E L O u ι   ( D I A G R A M   M E T H O D )
######################################################################
def _diagram(model: PartialInterpretation, sigma: Signature, taken: Set[str]) -> Tuple[List[CI], Dict[str, Name]]:
    """The ELOu(Σ) diagram of a finite interpretation, one fresh name per element"""
    variables: Dict[str, Name] = {}
    for element in model.domain:
        variables[element] = Name(fresh_name("X_d", taken))
        taken.add(variables[element].name)
    axioms: List[CI] = []
    for element, variable in variables.items():
        for name in sorted(sigma.concepts):
            if element in model.extension_of(name):
                axioms.append(CI(variable, Name(name)))
        for individual in sorted(sigma.individuals):
            if model.individuals.get(individual) == element:
                axioms.append(CI(variable, nominal(individual)))
        for role in sorted(sigma.roles):
            for successor in sorted(model.successors_of(role, element)):
                axioms.append(CI(variable, Exists(Role(role), variables[successor])))
        for other in variables.values():
            axioms.append(CI(variable, Exists(UNIVERSAL, other)))
    return axioms, variables


def elo_re_exists(ontology: Ontology, individual: str, sigma: Signature) -> bool:
    """
    True iff an ELOuι(Σ) referring expression for the individual exists

    The individual must denote in every model of O; otherwise
    UndecidedRegime is raised.
    """
    check_dialect(ontology, Dialect.ELO)
    _require_individual(ontology, individual)
    if individual in sigma.individuals:
        return True
    target = nominal(individual)
    if not elo_entail(ontology, CI(Top(), Exists(UNIVERSAL, target))):
        raise UndecidedRegime(f"{individual} need not denote; no decision procedure is known for this case")

    taken = set(signature_of(ontology).concepts)
    anchor = Name(fresh_name(f"A_{individual}", taken))
    taken.add(anchor.name)
    graph = saturate(elo_normal_form(ontology.extend(equivalence(anchor, target))), anchor)
    model = canonical_model(graph)
    if model is None:
        logger.info("Ontology is inconsistent: every concept refers to %s", individual)
        return True
    diagram, variables = _diagram(model.interp, sigma, taken)
    logger.debug("Diagram of %d elements, %d axioms", len(variables), len(diagram))
    verdict = elo_entail(ontology.extend(diagram), CI(variables[model.target_element], target))
    logger.info("ELOuι(%s) referring expression for %s: %s", sigma.listing(), individual, verdict)
    return verdict


######################################################################
#  A L C O u ι   ( T Y P E - S E T   P A I R S )
######################################################################
Pair = Tuple[int, int]


def _positions(mask: int) -> Iterator[int]:
    position = 0
    while mask:
        if mask & 1:
            yield position
        mask >>= 1
        position += 1


def _count(mask: int) -> int:
    return bin(mask).count("1")


@dataclass
class MosaicState:
    """A good set of type-set pairs: each pair is one bisimulation class of two models"""

    pairs: List[Tuple[List[List[str]], List[List[str]]]] = field(default_factory=list)
    closure: List[str] = field(default_factory=list)
    sigma: Signature = field(default_factory=Signature)

    def to_dict(self) -> dict:
        """Serializes the state into a dictionary"""
        return {
            "pairs": [{"left": left, "right": right} for left, right in self.pairs],
            "closure": self.closure,
            "sigma": sorted(self.sigma.symbols()),
        }


class MosaicSearch:
    """
    Searches for a good set of pairs (T1, T2) of type sets

    Types are local positions into the realizable types of the ontology
    with {a} added to the closure. A pair is a couple of bitmasks over
    positions, T1 for the model where a is the point and T2 for the model
    where the point differs from a.

    The search fixes the ∃u profile of both sides and the holder type of
    every nominal, builds all Σ-coherent pairs that respect the shape
    conditions of nominals and definite descriptions, and then alternates
    elimination with branching on the remaining global conditions.
    """

    # pylint: disable=too-many-instance-attributes

    def __init__(
        self,
        ontology: Ontology,
        individual: str,
        sigma: Signature,
        budget: Optional[int] = None,
        branch_limit: Optional[int] = None,
        max_types: Optional[int] = None,
    ):
        self.individual = individual
        self.sigma = sigma
        self.budget = budget or config.MOSAIC_BUDGET
        self.branch_limit = branch_limit or config.MOSAIC_BRANCH_LIMIT
        self.branches = 0

        target = nominal(individual)
        prepared = eliminate_assertions(ontology)
        engine = TypeElimination(prepared.cis, extra=[target, Not(target)], max_types=max_types)
        self.engine = engine
        candidates = sorted(engine.witnessed(range(len(engine.types))))
        self.types = [t for t in candidates if engine.realizable([t])]
        self.masks = [engine.types[t] for t in self.types]
        self.target_bit = 1 << engine.index[target]

        positions = range(len(self.types))
        self.successors = {
            role: [
                sum(1 << q for q in positions if engine.compatible(role, self.types[p], self.types[q]))
                for p in positions
            ]
            for role in engine.role_masks
        }
        self.forced = {role: [engine.forced(role, t) for t in self.types] for role in engine.role_masks}
        self.sigma_names = 0
        self.universal: List[Tuple[int, Callable[[int], bool]]] = []
        for i, atom in enumerate(engine.atoms):
            if isinstance(atom, Name) and atom.name in sigma.concepts:
                self.sigma_names |= 1 << i
            elif isinstance(atom, Exists) and atom.role.is_universal:
                self.universal.append((1 << i, engine.compile(atom.filler)))
        self.nominals = [(1 << i, engine.atoms[i].term.name) for i in engine.nominal_atoms]
        self.iotas = [
            (1 << i, body, signature_of(engine.atoms[i].term.body) <= sigma) for i, body in engine.iota_atoms
        ]
        self.pairs: List[Pair] = []
        self._steps: Dict[Tuple[str, int, int], bool] = {}
        logger.info("Mosaic search over %d realizable types", len(self.types))

    ##################################################
    # Pair universe
    ##################################################
    def _anchorings(self, profiles: Tuple[int, int]) -> Iterator[Tuple[int, int]]:
        """Side masks keeping at most one holder type per nominal"""
        sides = [
            sum(1 << p for p in range(len(self.types)) if self.masks[p] & self.engine.universal_mask == profile)
            for profile in profiles
        ]
        options = []
        for bit, name in self.nominals:
            holders = [[p for p in _positions(side) if self.masks[p] & bit] for side in sides]
            choices = []
            for first in holders[0] + [None]:
                for second in holders[1] + [None]:
                    if name == self.individual and first is None:
                        continue
                    if name in self.sigma.individuals and (first is None) != (second is None):
                        continue
                    choices.append((first, second))
            options.append(choices)

        nominal_mask = 0
        for bit, _ in self.nominals:
            nominal_mask |= bit
        for combination in product(*options):
            anchored = []
            for i, side in enumerate(sides):
                chosen = {choice[i] for choice in combination if choice[i] is not None}
                if any(
                    self.masks[p] & bit and choice[i] != p
                    for p in chosen
                    for (bit, _), choice in zip(self.nominals, combination)
                ):
                    break
                held = sum(1 << p for p in _positions(side) if self.masks[p] & nominal_mask)
                anchored.append(side & ~held | sum(1 << p for p in chosen))
            else:
                yield anchored[0], anchored[1]

    def _shape_ok(self, pair: Pair) -> bool:
        """Shape conditions for pairs holding a nominal or a definite description"""
        # pylint: disable=too-many-return-statements
        single = _count(pair[0]) == 1 and _count(pair[1]) == 1
        for own, other in ((pair[0], pair[1]), (pair[1], pair[0])):
            for bit, name in self.nominals:
                held = [p for p in _positions(own) if self.masks[p] & bit]
                if len(held) > 1:
                    return False
                if held:
                    if name in self.sigma.individuals:
                        if not single or not self.masks[next(_positions(other))] & bit:
                            return False
                    elif _count(own) < 2 and not single:
                        return False
            for bit, body, in_sigma in self.iotas:
                held = [p for p in _positions(own) if self.masks[p] & bit]
                if len(held) > 1:
                    return False
                if held:
                    if any(body(self.masks[p]) for p in _positions(own) if p != held[0]):
                        return False
                    if in_sigma:
                        if not single or not self.masks[next(_positions(other))] & bit:
                            return False
                    elif _count(own) < 2 and not single:
                        return False
        return True

    @staticmethod
    def _subsets(positions: Sequence[int]) -> Iterator[int]:
        for selector in range(1, 1 << len(positions)):
            yield sum(1 << positions[j] for j in range(len(positions)) if selector >> j & 1)

    def _build_pairs(self, sides: Tuple[int, int]) -> List[Pair]:
        groups: List[Dict[int, List[int]]] = [{}, {}]
        for i, side in enumerate(sides):
            for p in _positions(side):
                groups[i].setdefault(self.masks[p] & self.sigma_names, []).append(p)
        shared = sorted(groups[0].keys() & groups[1].keys())
        total = sum((2 ** len(groups[0][key]) - 1) * (2 ** len(groups[1][key]) - 1) for key in shared)
        if total > self.budget:
            raise ResourceExceeded(f"{total} candidate pairs exceed the mosaic budget of {self.budget}")
        pairs = []
        for key in shared:
            for left in self._subsets(groups[0][key]):
                for right in self._subsets(groups[1][key]):
                    if self._shape_ok((left, right)):
                        pairs.append((left, right))
        return pairs

    ##################################################
    # Elimination
    ##################################################
    def _step(self, role: str, source: int, target: int) -> bool:
        """Every type of source has an r-coherent successor in target"""
        key = (role, source, target)
        cached = self._steps.get(key)
        if cached is None:
            cached = all(self.successors[role][p] & target for p in _positions(source))
            self._steps[key] = cached
        return cached

    def _covered(self, role: str, position: int, candidates: int) -> int:
        covered = 0
        for q in _positions(self.successors[role][position] & candidates):
            covered |= self.forced[role][q]
        return covered

    def _successor_reach(self, role: str, pair: Pair, side: int, by_side: List[Dict[int, Set[int]]]) -> int:
        """Types on side found in pairs reachable from pair by role"""
        other = 1 - side
        reach = 0
        for own, partners in by_side[side].items():
            if not own & ~reach:
                continue
            if not self._step(role, pair[side], own):
                continue
            if any(self._step(role, pair[other], partner) for partner in partners):
                reach |= own
        return reach

    def _saturated(self, pair: Pair, reach: List[int], by_side: List[Dict[int, Set[int]]]) -> bool:
        for role, role_mask in self.engine.role_masks.items():
            for side in (0, 1):
                candidates = None
                for p in _positions(pair[side]):
                    needed = self.masks[p] & role_mask
                    if not needed:
                        continue
                    if candidates is None:
                        if role in self.sigma.roles:
                            candidates = self._successor_reach(role, pair, side, by_side)
                        else:
                            candidates = reach[side]
                    if needed & ~self._covered(role, p, candidates):
                        return False
        return True

    def _eliminate(self, alive: Set[int]) -> Set[int]:
        """Greatest subset of existentially and Σ-existentially saturated pairs"""
        alive = set(alive)
        while alive:
            reach = [0, 0]
            by_side: List[Dict[int, Set[int]]] = [{}, {}]
            for q in alive:
                left, right = self.pairs[q]
                reach[0] |= left
                reach[1] |= right
                by_side[0].setdefault(left, set()).add(right)
                by_side[1].setdefault(right, set()).add(left)
            removed = {q for q in alive if not self._saturated(self.pairs[q], reach, by_side)}
            if not removed:
                break
            alive -= removed
        return alive

    ##################################################
    # Global conditions
    ##################################################
    def _is_target(self, pair: Pair) -> bool:
        return any(self.masks[p] & self.target_bit for p in _positions(pair[0])) and any(
            not self.masks[p] & self.target_bit for p in _positions(pair[1])
        )

    def _universal_ok(self, alive: Set[int], profiles: Tuple[int, int]) -> bool:
        for side in (0, 1):
            reach = 0
            for q in alive:
                reach |= self.pairs[q][side]
            for bit, filler in self.universal:
                if profiles[side] & bit and not any(filler(self.masks[p]) for p in _positions(reach)):
                    return False
        return True

    def _singleton_node(self, pair: Pair, side: int, position: int) -> bool:
        if self.masks[position] & self.engine.singleton_mask:
            return True
        other = pair[1 - side]
        return (
            _count(pair[side]) == 1
            and _count(other) == 1
            and bool(self.masks[next(_positions(other))] & self.engine.singleton_mask)
        )

    def _holders(self, alive: Set[int], side: int, bit: int) -> List[int]:
        holders = [q for q in alive if any(self.masks[p] & bit for p in _positions(self.pairs[q][side]))]
        return sorted(holders, key=lambda q: (-_count(self.pairs[q][0]) - _count(self.pairs[q][1]), q))

    def _violation(self, alive: Set[int]) -> Optional[List[FrozenSet[int]]]:
        """Alternative removals repairing the first violated condition, or None"""
        for side in (0, 1):
            for bit, _ in self.nominals:
                holders = self._holders(alive, side, bit)
                if len(holders) > 1:
                    return [frozenset(holders) - {keep} for keep in holders] + [frozenset(holders)]
            for bit, body, _ in self.iotas:
                holders = self._holders(alive, side, bit)
                if len(holders) > 1:
                    return [frozenset(holders) - {keep} for keep in holders] + [frozenset(holders)]
                if holders:
                    pair = self.pairs[holders[0]]
                    held = next(p for p in _positions(pair[side]) if self.masks[p] & bit)
                    others = frozenset(
                        q
                        for q in alive
                        if any(p != held and body(self.masks[p]) for p in _positions(self.pairs[q][side]))
                    )
                    if others:
                        return [others, frozenset(holders)]
                    continue
                members = set()
                for q in alive:
                    members.update(p for p in _positions(self.pairs[q][side]) if body(self.masks[p]))
                if len(members) == 1:
                    member = members.pop()
                    nodes = [q for q in alive if self.pairs[q][side] >> member & 1]
                    if len(nodes) == 1 and self._singleton_node(self.pairs[nodes[0]], side, member):
                        return [frozenset(nodes)]
        return None

    def _search(self, alive: Set[int], profiles: Tuple[int, int]) -> Optional[FrozenSet[int]]:
        self.branches += 1
        if self.branches > self.branch_limit:
            raise ResourceExceeded(f"mosaic search exceeded {self.branch_limit} branches")
        alive = self._eliminate(alive)
        if not any(self._is_target(self.pairs[q]) for q in alive):
            return None
        if not self._universal_ok(alive, profiles):
            return None
        options = self._violation(alive)
        if options is None:
            return frozenset(alive)
        for removal in options:
            rest = alive - removal
            if not any(self._is_target(self.pairs[q]) for q in rest):
                continue
            result = self._search(rest, profiles)
            if result is not None:
                return result
        return None

    def run(self) -> Optional[MosaicState]:
        """A good set containing a pair with {a} on the left and ¬{a} on the right, or None"""
        profiles = sorted({mask & self.engine.universal_mask for mask in self.masks})
        for left in profiles:
            for right in profiles:
                for sides in self._anchorings((left, right)):
                    self.pairs = self._build_pairs(sides)
                    found = self._search(set(range(len(self.pairs))), (left, right))
                    if found is not None:
                        logger.info("Good set of %d pairs after %d branches", len(found), self.branches)
                        return self._state(found)
        logger.info("No good set after %d branches", self.branches)
        return None

    def _state(self, alive: FrozenSet[int]) -> MosaicState:
        pairs = []
        for q in sorted(alive, key=lambda q: self.pairs[q]):
            left, right = self.pairs[q]
            pairs.append(
                (
                    [self.engine.describe(self.types[p]) for p in _positions(left)],
                    [self.engine.describe(self.types[p]) for p in _positions(right)],
                )
            )
        return MosaicState(pairs, [render(c) for c in self.engine.closure], self.sigma)


def joint_consistency(
    ontology: Ontology,
    individual: str,
    sigma: Signature,
    budget: Optional[int] = None,
    branch_limit: Optional[int] = None,
) -> Optional[MosaicState]:
    """A good set witnessing that O,{a} and O,¬{a} are jointly consistent, or None"""
    check_dialect(ontology, Dialect.ALCO)
    _require_individual(ontology, individual)
    return MosaicSearch(ontology, individual, sigma, budget, branch_limit).run()


def alco_re_exists(
    ontology: Ontology,
    individual: str,
    sigma: Signature,
    budget: Optional[int] = None,
    branch_limit: Optional[int] = None,
) -> bool:
    """True iff an ALCOuι(Σ) referring expression for the individual exists"""
    check_dialect(ontology, Dialect.ALCO)
    _require_individual(ontology, individual)
    if individual in sigma.individuals:
        return True
    verdict = joint_consistency(ontology, individual, sigma, budget, branch_limit) is None
    logger.info("ALCOuι(%s) referring expression for %s: %s", sigma.listing(), individual, verdict)
    return verdict


def re_exists(ontology: Ontology, individual: str, sigma: Signature, language: str = "alco", **kwargs) -> bool:
    """Dispatches on the language of the referring expression"""
    if language == "fo":
        return fo_re_exists(ontology, individual, sigma)
    if language == "elo":
        return elo_re_exists(ontology, individual, sigma)
    if language == "alco":
        return alco_re_exists(ontology, individual, sigma, **kwargs)
    raise ValueError(f"unknown language {language}; expected one of {', '.join(LANGUAGES)}")


######################################################################
#  B O U N D E D   E N U M E R A T I O N
######################################################################
def concepts_by_size(sigma: Signature, dialect: Dialect, max_size: int, universal: bool = True) -> Iterator[Concept]:
    """Every Σ concept of the dialect up to max_size, smaller ones first"""
    # pylint: disable=too-many-branches
    boolean = dialect != Dialect.ELO
    roles = [Role(name) for name in sorted(sigma.roles)] + ([UNIVERSAL] if universal else [])
    layers: Dict[int, List[Concept]] = {}
    seen: Set[Concept] = set()
    for current in range(1, max_size + 1):
        layer: List[Concept] = []

        def emit(concept: Concept, layer=layer) -> None:
            if concept not in seen:
                seen.add(concept)
                layer.append(concept)

        if current == 1:
            emit(Top())
            if boolean:
                emit(Bot())
            for name in sorted(sigma.concepts):
                emit(Name(name))
            for individual in sorted(sigma.individuals):
                emit(nominal(individual))
        else:
            for filler in layers[current - 1]:
                for role in roles:
                    emit(Exists(role, filler))
                if boolean and not isinstance(filler, Not):
                    emit(Not(filler))
                emit(iota_nominal(filler))
            for left_size in range(1, current - 1):
                right_size = current - 1 - left_size
                if left_size > right_size:
                    break
                for left in layers[left_size]:
                    if isinstance(left, Top):
                        continue
                    for right in layers[right_size]:
                        if isinstance(right, Top) or left == right:
                            continue
                        if left_size == right_size and render(right) < render(left):
                            continue
                        emit(And((left, right)))
        layers[current] = layer
        yield from layer


def _reference_model(ontology: Ontology, individual: str, elo: bool) -> Optional[PartialInterpretation]:
    """Some model of O in which the individual denotes"""
    denoting = ontology.extend([CI(Top(), Exists(UNIVERSAL, nominal(individual)))])
    if elo:
        model = elo_model(denoting)
        return model.interp if model else None
    return alcouiota_model(denoting)


def enumerate_re(
    ontology: Ontology,
    individual: str,
    sigma: Signature,
    dialect: Dialect = Dialect.ALCO,
    max_size: Optional[int] = None,
    depth: Optional[int] = None,
    universal: bool = True,
    limit: Optional[int] = None,
) -> Optional[Concept]:
    """
    The first Σ concept C of the dialect, by size, with O ⊨ {a} ≡ C

    Returns None when no candidate up to max_size works, which says
    nothing about larger concepts.
    """
    max_size = max_size or config.ENUM_MAX_SIZE
    limit = limit or config.ENUM_LIMIT
    entail = _entailment_for(ontology)
    ontology_elo = entail is elo_entail
    model = _reference_model(ontology, individual, ontology_elo)
    point = model.individuals.get(individual) if model else None
    target = nominal(individual)
    decide = elo_entail if ontology_elo and dialect == Dialect.ELO else alcouiota_entail

    for tried, candidate in enumerate(concepts_by_size(sigma, dialect, max_size, universal), start=1):
        if tried > limit:
            logger.warning("Enumeration stopped after %d candidates", limit)
            return None
        if depth is not None and role_depth(candidate) > depth:
            continue
        if model is not None and concept_extension(model, candidate) != frozenset({point}):
            continue
        if decide(ontology, CI(target, candidate)) and decide(ontology, CI(candidate, target)):
            logger.info("Referring expression for %s: %s", individual, render(candidate))
            return candidate
    logger.info("No referring expression for %s up to size %d", individual, max_size)
    return None
