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
ELOuι Completion Engine

Saturates a classification graph for an ontology in ELOuι normal form and a
target concept name. Nodes are ⊤, the concept names, the nominals {a} and a
copy A^c per concept name standing for a second element of A. Copies are
deleted once A is known to have at most one element, which is what licenses
{ιA} in the labels.

    R1   C ⊓ D ⊑ B, C, D ∈ S(E)                 add B to S(E)
    R2   target ~> E, C ⊑ ∃r.D, C ∈ S(E)        add r to R(E, D) and R(E^c, D)
    R3   ∃r.C ⊑ D, C ∈ S(B), r ∈ R(E, B)        add D to S(E)
    R3'  ∃u.C ⊑ D, target ~> C, E ∈ V          add D to S(E)
    R4   {τ} ∈ S(E) ∩ S(D), target ~> D         S(E) := S(E) ∪ S(D)
    R5   r ∈ R(E, D), ⊥ ∈ S(D)                  add ⊥ to S(E)
    R6   {τ} ⊑ D, {τ} ∈ S(E)                    add D to S(E)
    R7   C ⊑ {τ}, C ∈ S(E)                      add {τ} to S(E)
    R8   {τ} ∈ S(B)                             delete B^c
    R9   B ∈ S(E), B^c deleted                  add {ιB} to S(E)
    R10  target ~> C, {ιB} ∈ S(C)               delete B^c

Rules are applied in rounds until none changes S, R or V.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple, Union

from freedl.common.errors import ResourceExceeded, ShapeError
from freedl.normalize import elo_normal_form, is_elo_normal
from freedl.semantics import PartialInterpretation
from freedl.syntax import (
    CI,
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
    Ontology,
    RoleAssertion,
    Signature,
    Top,
    check_dialect,
    equivalence,
    fresh_name,
    render,
    signature_of,
    subconcepts,
)
from freedl.translate import internalize

logger = logging.getLogger("flask.app")


@dataclass(frozen=True)
class Copy:
    """The copy node A^c of a concept name A"""

    name: str


Node = Union[Top, Name, Nominal, Copy]
Label = Concept


def render_node(node: Node) -> str:
    """Text form of a node or label"""
    if isinstance(node, Copy):
        return f"{node.name}^c"
    return render(node)


######################################################################
#  C L A S S I F I C A T I O N   G R A P H
######################################################################
class ClassificationGraph:
    """
    Nodes V, labels S and edges R for one target concept name

    Build it with saturate(); the graph is complete when that returns.
    """

    # pylint: disable=too-many-instance-attributes

    def __init__(self, ontology: Ontology, target: Name):
        self.ontology = ontology
        self.target = target
        self.complete = False
        self._index(ontology)

        names = sorted({c.name for c in subconcepts(ontology) if isinstance(c, Name)} | {target.name})
        individuals = sorted(
            {c for c in subconcepts(ontology) if isinstance(c, Nominal) and isinstance(c.term, Individual)},
            key=render,
        )
        self.basic: List[Node] = [Top()] + [Name(n) for n in names] + individuals
        self.copies: Dict[str, Copy] = {n: Copy(n) for n in names}
        self.nodes: Set[Node] = set(self.basic) | set(self.copies.values())
        self.iotas: Set[Nominal] = {
            c for c in subconcepts(ontology) if isinstance(c, Nominal) and isinstance(c.term, Iota)
        }

        self.labels: Dict[Node, Set[Label]] = {node: {node, Top()} for node in self.basic}
        for name, copy in self.copies.items():
            self.labels[copy] = {Top(), Name(name)}
        self.edges: Dict[Node, Dict[Node, Set[str]]] = {node: {} for node in self.nodes}

        self.changes = 0
        role_count = len({c.role.name for c in subconcepts(ontology) if isinstance(c, Exists)} | {"u"})
        vertices = len(self.nodes)
        universe = len(self.basic) + 1 + len(self.iotas)
        self.bound = vertices * universe * (vertices * vertices * role_count + 1)

    def _index(self, ontology: Ontology) -> None:
        self.conj_by: Dict[Tuple[Concept, Concept], Set[Concept]] = {}
        self.exists_lhs_by: Dict[Tuple[str, Concept], Set[Concept]] = {}
        self.exists_u_lhs: List[Tuple[Concept, Concept]] = []
        self.exists_rhs_by: Dict[Concept, Set[Tuple[str, Concept]]] = {}
        self.nom_lhs_by: Dict[Nominal, Set[Concept]] = {}
        self.nom_rhs_by: Dict[Concept, Set[Nominal]] = {}
        for axiom in ontology:
            if not isinstance(axiom, CI) or not is_elo_normal(axiom):
                raise ShapeError(f"not in ELOuι normal form: {render(axiom)}")
            lhs, rhs = axiom.lhs, axiom.rhs
            if isinstance(lhs, And):
                first, second = lhs.operands
                self.conj_by.setdefault((first, second), set()).add(rhs)
                self.conj_by.setdefault((second, first), set()).add(rhs)
            elif isinstance(lhs, Exists):
                if lhs.role.is_universal:
                    self.exists_u_lhs.append((lhs.filler, rhs))
                else:
                    self.exists_lhs_by.setdefault((lhs.role.name, lhs.filler), set()).add(rhs)
            elif isinstance(lhs, Nominal):
                self.nom_lhs_by.setdefault(lhs, set()).add(rhs)
            elif isinstance(rhs, Exists):
                self.exists_rhs_by.setdefault(lhs, set()).add((rhs.role.name, rhs.filler))
            elif isinstance(rhs, Nominal):
                self.nom_rhs_by.setdefault(lhs, set()).add(rhs)
            else:
                # A ⊑ B is read as A ⊓ A ⊑ B
                self.conj_by.setdefault((lhs, lhs), set()).add(rhs)

    ##################################################
    # Fact bookkeeping
    ##################################################
    def _count(self, amount: int = 1) -> None:
        self.changes += amount
        if self.changes > self.bound:
            raise ResourceExceeded(f"completion exceeded {self.bound} rule applications")

    def _add_labels(self, node: Node, labels: Iterable[Label]) -> bool:
        fresh = set(labels) - self.labels[node]
        if not fresh:
            return False
        self.labels[node] |= fresh
        self._count(len(fresh))
        return True

    def _add_edge(self, source: Node, target: Node, role: str) -> bool:
        roles = self.edges[source].setdefault(target, set())
        if role in roles:
            return False
        roles.add(role)
        self._count()
        return True

    def _delete_copy(self, name: str) -> bool:
        copy = self.copies.get(name)
        if copy is None or copy not in self.nodes:
            return False
        self.nodes.discard(copy)
        self._count()
        logger.debug("Deleted copy node %s^c", name)
        return True

    ##################################################
    # Reachability
    ##################################################
    def reach(self) -> Set[Node]:
        """Basic nodes C with target ~> C"""
        reached: Set[Node] = set()
        frontier = [n for n in self.labels[self.target] if n in self.labels and not isinstance(n, Copy)]
        while frontier:
            node = frontier.pop()
            if node in reached:
                continue
            reached.add(node)
            for label in self.labels[node]:
                if label in self.labels and not isinstance(label, Copy) and label not in reached:
                    frontier.append(label)
            for successor, roles in self.edges[node].items():
                if roles and not isinstance(successor, Copy) and successor not in reached:
                    frontier.append(successor)
        return reached

    ##################################################
    # Saturation
    ##################################################
    def _node_round(self, node: Node, reach: Set[Node], universal: Set[Concept]) -> bool:
        # pylint: disable=too-many-branches
        labels = self.labels[node]
        new: Set[Label] = set(universal)
        for first in labels:
            for second in labels:
                new |= self.conj_by.get((first, second), set())
            new |= self.nom_rhs_by.get(first, set())
            if isinstance(first, Nominal):
                new |= self.nom_lhs_by.get(first, set())
            if isinstance(first, Name):
                iota = Nominal(Iota(first))
                if iota in self.iotas and self.copies[first.name] not in self.nodes:
                    new.add(iota)
        for successor, roles in self.edges[node].items():
            if not roles:
                continue
            successor_labels = self.labels[successor]
            if Bot() in successor_labels:
                new.add(Bot())
            for role in roles:
                for label in successor_labels:
                    new |= self.exists_lhs_by.get((role, label), set())
        nominals = {label for label in labels if isinstance(label, Nominal)}
        if nominals:
            for other in reach:
                if nominals & self.labels[other]:
                    new |= self.labels[other]
        return self._add_labels(node, new)

    def _graph_round(self, reach: Set[Node]) -> bool:
        changed = False
        for node in sorted(reach, key=render_node):
            copy = self.copies.get(node.name) if isinstance(node, Name) else None
            for label in list(self.labels[node]):
                for role, filler in self.exists_rhs_by.get(label, ()):
                    changed |= self._add_edge(node, filler, role)
                    if copy is not None and copy in self.nodes:
                        changed |= self._add_edge(copy, filler, role)
            for label in list(self.labels[node]):
                if isinstance(label, Nominal) and isinstance(label.term, Iota):
                    changed |= self._delete_copy(label.term.body.name)
        for node in self.basic:
            if isinstance(node, Name) and any(isinstance(label, Nominal) for label in self.labels[node]):
                changed |= self._delete_copy(node.name)
        return changed

    def saturate(self) -> "ClassificationGraph":
        """Applies R1-R10 until nothing changes"""
        rounds = 0
        while True:
            rounds += 1
            reach = self.reach()
            universal: Set[Concept] = {rhs for filler, rhs in self.exists_u_lhs if filler in reach}
            changed = self._graph_round(reach)
            for node in sorted(self.nodes, key=render_node):
                changed |= self._node_round(node, reach, universal)
            if not changed:
                break
        self.complete = True
        logger.info(
            "Saturated graph for %s: %d nodes, %d facts, %d rounds", self.target.name, len(self.nodes), self.changes, rounds
        )
        return self

    ##################################################
    # Queries
    ##################################################
    def subsumers(self, node: Optional[Node] = None) -> Set[Label]:
        """S(node), S(target) by default"""
        return set(self.labels[node if node is not None else self.target])

    def unsatisfiable(self) -> bool:
        """⊥ ∈ S(target)"""
        return Bot() in self.labels[self.target]

    def subsumes(self, concept: Concept) -> bool:
        """S(target) ∩ {concept, ⊥} is nonempty"""
        labels = self.labels[self.target]
        return concept in labels or Bot() in labels

    def report(self) -> str:
        """Debug dump: one line per node, then one line per edge"""
        lines = []
        for node in sorted(self.nodes, key=render_node):
            labels = ", ".join(sorted(render_node(label) for label in self.labels[node]))
            lines.append(f"{render_node(node)}: {labels}")
        for node in sorted(self.nodes, key=render_node):
            for successor, roles in sorted(self.edges[node].items(), key=lambda item: render_node(item[0])):
                if roles and successor in self.nodes:
                    lines.append(f"{render_node(node)} -> {render_node(successor)}: {', '.join(sorted(roles))}")
        return "\n".join(lines) + "\n"


def saturate(ontology: Ontology, target: Union[Name, str]) -> ClassificationGraph:
    """The completed classification graph for a normal form ontology and a target name"""
    if isinstance(target, str):
        target = Name(target)
    return ClassificationGraph(ontology, target).saturate()


######################################################################
#  E N T A I L M E N T
######################################################################
def _as_inclusion(axiom) -> CI:
    if isinstance(axiom, CI):
        return axiom
    if isinstance(axiom, (ConceptAssertion, RoleAssertion)):
        return CI(Top(), internalize(axiom))
    raise ShapeError(f"not an ELOuι axiom: {render(axiom)}")


def elo_entail(ontology: Ontology, axiom) -> bool:
    """O ⊨ α on partial interpretations, for a CI or an assertion α"""
    check_dialect(ontology, Dialect.ELO)
    check_dialect(axiom, Dialect.ELO)
    ci = _as_inclusion(axiom)
    if isinstance(ci.rhs, Top):
        return True
    taken = set((signature_of(ontology) | signature_of(ci)).concepts)
    query = Name(fresh_name("Q_A", taken))
    taken.add(query.name)
    answer = Name(fresh_name("Q_B", taken))
    extended = ontology.extend(equivalence(query, ci.lhs) + equivalence(answer, ci.rhs))
    graph = saturate(elo_normal_form(extended), query)
    verdict = graph.subsumes(answer)
    logger.info("ELOuι entailment of %s: %s", render(axiom), verdict)
    return verdict


def classify(ontology: Ontology) -> Dict[str, List[str]]:
    """Named subsumers of every concept name of the ontology ("bot" marks an unsatisfiable one)"""
    names = sorted(signature_of(ontology).concepts)
    normal = elo_normal_form(ontology)
    hierarchy: Dict[str, List[str]] = {}
    for name in names:
        graph = saturate(normal, Name(name))
        if graph.unsatisfiable():
            hierarchy[name] = ["bot"]
            continue
        hierarchy[name] = sorted(
            label.name for label in graph.subsumers() if isinstance(label, Name) and label.name in names
        )
    return hierarchy


######################################################################
#  C A N O N I C A L   M O D E L
######################################################################
@dataclass
class CanonicalModel:
    """The finite canonical model of an ontology and a target name"""

    interp: PartialInterpretation
    class_of: Dict[str, str] = field(default_factory=dict)
    target_element: str = ""


def canonical_model(
    graph: ClassificationGraph, signature: Optional[Signature] = None
) -> Optional[CanonicalModel]:
    """
    Quotients the target's reach and its live copies by shared nominals

    Returns None when ⊥ ∈ S(target). When a signature is given only its
    concept names are interpreted.
    """
    # pylint: disable=too-many-locals
    if not graph.complete:
        graph.saturate()
    if graph.unsatisfiable():
        logger.info("No canonical model: %s is unsatisfiable", graph.target.name)
        return None
    reach = graph.reach()
    members: List[Node] = sorted(reach, key=render_node)
    members += [
        graph.copies[n.name] for n in sorted(reach, key=render_node)
        if isinstance(n, Name) and graph.copies[n.name] in graph.nodes
    ]

    parent: Dict[Node, Node] = {node: node for node in members}

    def find(node: Node) -> Node:
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    holders: Dict[Label, List[Node]] = {}
    for node in members:
        for label in graph.labels[node]:
            if isinstance(label, Nominal):
                holders.setdefault(label, []).append(node)
    for nodes in holders.values():
        for other in nodes[1:]:
            first, second = find(nodes[0]), find(other)
            if first != second:
                if render_node(second) < render_node(first):
                    first, second = second, first
                parent[second] = first

    element = {node: f"[{render_node(find(node))}]" for node in members}
    domain = tuple(sorted(set(element.values())))

    concepts: Dict[str, Set[str]] = {}
    roles: Dict[str, Set[Tuple[str, str]]] = {}
    individuals: Dict[str, str] = {}
    for node in members:
        for label in graph.labels[node]:
            if isinstance(label, Name):
                concepts.setdefault(label.name, set()).add(element[node])
            elif isinstance(label, Nominal) and isinstance(label.term, Individual) and not isinstance(node, Copy):
                individuals.setdefault(label.term.name, element[node])
        for successor, names in graph.edges[node].items():
            if successor not in element:
                continue
            for role in names:
                if role != "u":
                    roles.setdefault(role, set()).add((element[node], element[successor]))
    if signature is not None:
        concepts = {name: concepts.get(name, set()) for name in signature.concepts}
        roles = {name: pairs for name, pairs in roles.items() if name in signature.roles}
        individuals = {name: d for name, d in individuals.items() if name in signature.individuals}

    interp = PartialInterpretation(
        domain,
        {name: frozenset(ext) for name, ext in concepts.items()},
        {name: frozenset(pairs) for name, pairs in roles.items()},
        individuals,
    )
    model = CanonicalModel(interp, {render_node(node): element[node] for node in members}, element[graph.target])
    logger.info("Canonical model for %s: %d elements", graph.target.name, len(domain))
    return model


def elo_model(ontology: Ontology, target: Optional[str] = None) -> Optional[CanonicalModel]:
    """Canonical model of an ELOuι ontology, for target (or a fresh ⊤ name)"""
    check_dialect(ontology, Dialect.ELO)
    signature = signature_of(ontology)
    if target is None:
        target = fresh_name("Q_T", signature.concepts)
        ontology = ontology.extend([CI(Top(), Name(target))])
    graph = saturate(elo_normal_form(ontology), Name(target))
    return canonical_model(graph, signature | Signature(concepts=frozenset({target})))
