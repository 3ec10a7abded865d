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
Bisimulations and Simulations

Greatest fixpoints over finite partial interpretations. Atoms are the Σ
concept names and the nominals {a} of the Σ individuals; an individual that
does not denote makes its nominal empty.
"""
import logging
from typing import FrozenSet, Set, Tuple

from freedl.semantics import PartialInterpretation
from freedl.syntax import Signature

logger = logging.getLogger("flask.app")

Pair = Tuple[str, str]
Relation = FrozenSet[Pair]


def _atoms(interp: PartialInterpretation, element: str, sigma: Signature) -> Tuple[FrozenSet[str], FrozenSet[str]]:
    names = frozenset(name for name in sigma.concepts if element in interp.extension_of(name))
    nominals = frozenset(a for a in sigma.individuals if interp.individuals.get(a) == element)
    return names, nominals


def _refine(
    left: PartialInterpretation,
    right: PartialInterpretation,
    relation: Set[Pair],
    roles: FrozenSet[str],
    back: bool = True,
) -> Set[Pair]:
    """Removes pairs violating forth (and back) until stable"""
    changed = True
    while changed:
        changed = False
        for d, e in sorted(relation):
            ok = True
            for role in roles:
                d_next = left.successors_of(role, d)
                e_next = right.successors_of(role, e)
                if any(not any((d2, e2) in relation for e2 in e_next) for d2 in d_next):
                    ok = False
                    break
                if back and any(not any((d2, e2) in relation for d2 in d_next) for e2 in e_next):
                    ok = False
                    break
            if not ok:
                relation.discard((d, e))
                changed = True
    return relation


def alco_bisim(left: PartialInterpretation, right: PartialInterpretation, sigma: Signature) -> Relation:
    """The greatest ALCO(Σ) bisimulation between two interpretations"""
    left_atoms = {d: _atoms(left, d, sigma) for d in left.domain}
    right_atoms = {e: _atoms(right, e, sigma) for e in right.domain}
    relation = {(d, e) for d in left.domain for e in right.domain if left_atoms[d] == right_atoms[e]}
    return frozenset(_refine(left, right, relation, sigma.roles))


def has_twin(interp: PartialInterpretation, sigma: Signature) -> Set[str]:
    """Elements ALCO(Σ) bisimilar to some other element of the same interpretation"""
    relation = alco_bisim(interp, interp, sigma)
    return {d for d, e in relation if d != e}


def alcouiota_relation(left: PartialInterpretation, right: PartialInterpretation, sigma: Signature) -> Relation:
    """
    The greatest ALCOuι(Σ) bisimulation, or the empty relation when none exists

    Pairs failing the twin condition are dropped before refinement; the
    largest remaining bisimulation contains every total one, so it is either
    total itself or no total bisimulation exists.
    """
    left_twins = has_twin(left, sigma)
    right_twins = has_twin(right, sigma)
    relation = {(d, e) for d, e in alco_bisim(left, right, sigma) if (d in left_twins) == (e in right_twins)}
    relation = _refine(left, right, relation, sigma.roles)
    total = {d for d, _ in relation} == set(left.domain) and {e for _, e in relation} == set(right.domain)
    if not total:
        if relation:
            logger.warning("Bisimulation pruned to non-total relation of %d pairs", len(relation))
        return frozenset()
    return frozenset(relation)


def alcouiota_bisim(
    left: PartialInterpretation, d: str, right: PartialInterpretation, e: str, sigma: Signature
) -> bool:
    """(I, d) and (J, e) are ALCOuι(Σ) bisimilar"""
    return (d, e) in alcouiota_relation(left, right, sigma)


def elou_simulation(
    left: PartialInterpretation, right: PartialInterpretation, sigma: Signature, universal: bool = True
) -> Relation:
    """The greatest ELO(Σ) simulation; with universal, empty unless it is left total"""
    left_atoms = {d: _atoms(left, d, sigma) for d in left.domain}
    right_atoms = {e: _atoms(right, e, sigma) for e in right.domain}
    relation = {
        (d, e)
        for d in left.domain
        for e in right.domain
        if left_atoms[d][0] <= right_atoms[e][0] and left_atoms[d][1] <= right_atoms[e][1]
    }
    relation = _refine(left, right, relation, sigma.roles, back=False)
    if universal and {d for d, _ in relation} != set(left.domain):
        return frozenset()
    return frozenset(relation)


def elou_simulates(
    left: PartialInterpretation,
    d: str,
    right: PartialInterpretation,
    e: str,
    sigma: Signature,
    universal: bool = True,
) -> bool:
    """(I, d) is ELOu(Σ) simulated by (J, e) (ELO(Σ) when universal is False)"""
    return (d, e) in elou_simulation(left, right, sigma, universal)
