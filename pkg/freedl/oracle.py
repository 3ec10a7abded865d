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
Bounded Model Oracle

Exhaustive search over small interpretations: domain size ascending, then
concept extensions, role extensions and individual maps. Extensions are
bitmasks over the domain. Elements are only enumerated with their concept
labels in ascending order, which skips renamings of the same structure.

Axioms are checked as soon as the symbols they mention are fixed.
"""
import logging
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from freedl import config
from freedl.common.errors import DialectError, ResourceExceeded
from freedl.dual_domain import DualDomainInterpretation, dd_satisfies, polarity_of
from freedl.semantics import PartialInterpretation
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
    Signature,
    Term,
    TermEquality,
    Top,
    iota_terms,
    render,
    render_term,
    signature_of,
)

logger = logging.getLogger("flask.app")


######################################################################
#  B I T M A S K   M O D E L
######################################################################
class MaskModel:
    """A partial interpretation over elements 0..size-1 with bitmask extensions"""

    def __init__(
        self,
        size: int,
        concepts: Dict[str, int],
        successors: Dict[str, Sequence[int]],
        individuals: Dict[str, Optional[int]],
    ):
        self.size = size
        self.full = (1 << size) - 1
        self.concepts = concepts
        self.successors = successors
        self.individuals = individuals
        self._memo: Dict[int, int] = {}

    def term(self, term: Term) -> Optional[int]:
        """Index of τ's value, or None"""
        if isinstance(term, Individual):
            return self.individuals.get(term.name)
        mask = self.concept(term.body)
        if mask and not mask & (mask - 1):
            return mask.bit_length() - 1
        return None

    def concept(self, concept: Concept) -> int:
        """Extension as a bitmask"""
        key = id(concept)
        cached = self._memo.get(key)
        if cached is None:
            cached = self._concept(concept)
            self._memo[key] = cached
        return cached

    def _concept(self, concept: Concept) -> int:
        # pylint: disable=too-many-return-statements
        if isinstance(concept, Top):
            return self.full
        if isinstance(concept, Bot):
            return 0
        if isinstance(concept, Name):
            return self.concepts.get(concept.name, 0)
        if isinstance(concept, Nominal):
            index = self.term(concept.term)
            return 0 if index is None else 1 << index
        if isinstance(concept, Not):
            return self.full & ~self.concept(concept.operand)
        if isinstance(concept, And):
            mask = self.full
            for operand in concept.operands:
                mask &= self.concept(operand)
            return mask
        if isinstance(concept, Exists):
            filler = self.concept(concept.filler)
            if concept.role.is_universal:
                return self.full if filler else 0
            rows = self.successors.get(concept.role.name)
            if rows is None:
                return 0
            mask = 0
            for element, row in enumerate(rows):
                if row & filler:
                    mask |= 1 << element
            return mask
        if isinstance(concept, ExistenceTop):
            raise DialectError("the existence concept needs dual-domain semantics")
        raise TypeError(f"not a concept: {concept!r}")

    def axiom(self, axiom) -> bool:
        """Partial-semantics satisfaction"""
        # pylint: disable=too-many-return-statements
        if isinstance(axiom, CI):
            return not self.concept(axiom.lhs) & ~self.concept(axiom.rhs)
        if isinstance(axiom, ConceptAssertion):
            index = self.term(axiom.term)
            return index is not None and bool(self.concept(axiom.concept) >> index & 1)
        if isinstance(axiom, RoleAssertion):
            subject, obj = self.term(axiom.subject), self.term(axiom.object)
            rows = self.successors.get(axiom.role)
            return subject is not None and obj is not None and rows is not None and bool(rows[subject] >> obj & 1)
        if isinstance(axiom, TermEquality):
            left = self.term(axiom.left)
            return left is not None and left == self.term(axiom.right)
        if isinstance(axiom, NegatedFormula):
            return not self.axiom(axiom.formula)
        if isinstance(axiom, Conjunction):
            return all(self.axiom(part) for part in axiom.formulas)
        raise TypeError(f"not an axiom: {axiom!r}")

    def to_interpretation(self) -> PartialInterpretation:
        """The equivalent PartialInterpretation over ids d0, d1, ..."""
        ids = [f"d{i}" for i in range(self.size)]
        return PartialInterpretation(
            tuple(ids),
            {name: frozenset(ids[i] for i in range(self.size) if mask >> i & 1) for name, mask in self.concepts.items()},
            {
                name: frozenset((ids[i], ids[j]) for i, row in enumerate(rows) for j in range(self.size) if row >> j & 1)
                for name, rows in self.successors.items()
            },
            {name: ids[index] for name, index in self.individuals.items() if index is not None},
        )


######################################################################
#  E N U M E R A T I O N
######################################################################
def _sorted_labels(masks: Sequence[int], size: int) -> bool:
    previous: Tuple[int, ...] = ()
    for element in range(size):
        label = tuple(mask >> element & 1 for mask in masks)
        if label < previous:
            return False
        previous = label
    return True


def count_interpretations(max_domain: int, concepts: int, roles: int, individuals: int, mode: str = "partial") -> int:
    """Number of interpretations enumerated without renaming pruning"""
    total = 0
    for size in range(1, max_domain + 1):
        choices = size + 1 if mode == "partial" else size
        total += 2 ** (concepts * size) * 2 ** (roles * size * size) * choices**individuals
    return total


class _Budget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit or config.ORACLE_BUDGET
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceExceeded(f"oracle budget of {self.limit} interpretations exhausted")


def _models(
    signature: Signature,
    axioms: Sequence,
    max_domain: int,
    mode: str = "partial",
    prune: bool = True,
    budget: Optional[int] = None,
    reject: Optional[Callable[[MaskModel], bool]] = None,
) -> Iterator[MaskModel]:
    """Every model of the axioms up to max_domain, in search order"""
    # pylint: disable=too-many-locals,too-many-arguments
    concepts = sorted(signature.concepts)
    roles = sorted(signature.roles)
    individuals = sorted(signature.individuals)
    concept_only, role_level, final = [], [], []
    for axiom in axioms:
        used = signature_of(axiom)
        if not used.roles and not used.individuals and not isinstance(axiom, (RoleAssertion, TermEquality)):
            concept_only.append(axiom)
        elif not used.individuals:
            role_level.append(axiom)
        else:
            final.append(axiom)
    spent = _Budget(budget)

    for size in range(1, max_domain + 1):
        masks = range(1 << size)
        choices: List[Optional[int]] = list(range(size))
        if mode == "partial":
            choices = [None] + choices
        for concept_masks in product(masks, repeat=len(concepts)):
            if prune and not _sorted_labels(concept_masks, size):
                continue
            extension = dict(zip(concepts, concept_masks))
            if not all(MaskModel(size, extension, {}, {}).axiom(ax) for ax in concept_only):
                continue
            for rows in product(product(masks, repeat=size), repeat=len(roles)):
                successors = dict(zip(roles, rows))
                if not all(MaskModel(size, extension, successors, {}).axiom(ax) for ax in role_level):
                    continue
                for values in product(choices, repeat=len(individuals)):
                    spent.spend()
                    model = MaskModel(size, extension, successors, dict(zip(individuals, values)))
                    if all(model.axiom(ax) for ax in final) and not (reject and reject(model)):
                        yield model


def interpretations(
    signature: Signature, max_domain: int, mode: str = "partial", prune: bool = True
) -> Iterator[PartialInterpretation]:
    """Every interpretation over signature up to max_domain"""
    for model in _models(signature, (), max_domain, mode, prune):
        yield model.to_interpretation()


######################################################################
#  O R A C L E S
######################################################################
def _axioms_of(ontology) -> List:
    return list(ontology) if isinstance(ontology, (Ontology, list, tuple)) else [ontology]


def oracle_sat(
    ontology, max_domain: int, mode: str = "partial", prune: bool = True, budget: Optional[int] = None
) -> Optional[PartialInterpretation]:
    """A model with at most max_domain elements, or None when none exists up to the bound"""
    axioms = _axioms_of(ontology)
    signature = signature_of(axioms)
    for model in _models(signature, axioms, max_domain, mode, prune, budget):
        logger.debug("Oracle model found with %d elements", model.size)
        return model.to_interpretation()
    logger.info("Oracle: no model up to %d elements", max_domain)
    return None


def oracle_entail(
    ontology, axiom, max_domain: int, mode: str = "partial", prune: bool = True, budget: Optional[int] = None
) -> Optional[PartialInterpretation]:
    """A model of O violating α within the bound, or None (entailed up to the bound)"""
    axioms = _axioms_of(ontology)
    signature = signature_of(axioms + [axiom])
    for model in _models(signature, axioms, max_domain, mode, prune, budget, reject=lambda m: m.axiom(axiom)):
        logger.debug("Oracle countermodel for %s with %d elements", render(axiom), model.size)
        return model.to_interpretation()
    return None


def _members(ids: Sequence[str], mask: int) -> FrozenSet[str]:
    return frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)


def _pairs(ids: Sequence[str], rows: Sequence[int]) -> FrozenSet[Tuple[str, str]]:
    return frozenset((ids[i], e) for i, row in enumerate(rows) for e in _members(ids, row))


def oracle_dd_sat(
    formula, polarity: str, max_outer: int, budget: Optional[int] = None
) -> Optional[DualDomainInterpretation]:
    """A dual-domain model with at most max_outer outer elements, or None"""
    # pylint: disable=too-many-locals
    polarity = polarity_of(polarity)
    signature = signature_of(formula)
    concepts = sorted(signature.concepts)
    roles = sorted(signature.roles)
    individuals = sorted(signature.individuals)
    terms = sorted(render_term(t) for t in iota_terms(formula))
    spent = _Budget(budget)
    for size in range(1, max_outer + 1):
        ids = [f"d{i}" for i in range(size)]
        full = (1 << size) - 1
        masks = range(1 << size)
        for inner in range(full):
            for concept_masks in product(masks, repeat=len(concepts)):
                if not _sorted_labels((inner,) + concept_masks, size):
                    continue
                outside = [ids[i] for i in range(size) if not inner >> i & 1]
                for rows in product(product(masks, repeat=size), repeat=len(roles)):
                    for values in product(range(size), repeat=len(individuals)):
                        for fallbacks in product(outside, repeat=len(terms)):
                            spent.spend()
                            interp = DualDomainInterpretation(
                                tuple(ids),
                                _members(ids, inner),
                                {n: _members(ids, m) for n, m in zip(concepts, concept_masks)},
                                {n: _pairs(ids, r) for n, r in zip(roles, rows)},
                                {a: ids[v] for a, v in zip(individuals, values)},
                                dict(zip(terms, fallbacks)),
                            )
                            if dd_satisfies(interp, formula, polarity):
                                return interp
    return None
