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
Worked Examples

Each golden is a named check with its expected boolean. The data files
ship in freedl/data and are shared with the test suites.
"""
import logging
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, List, Optional, Union

from freedl.alcou_sat import alcouiota_entail, alcouiota_sat
from freedl.bisim import alcouiota_bisim, alcouiota_relation, elou_simulates
from freedl.common.errors import ReasonerError
from freedl.elo_engine import elo_entail
from freedl.parser import parse_axiom, parse_concept, parse_ontology
from freedl.re_exist import alco_re_exists, elo_re_exists, enumerate_re, fo_re_exists
from freedl.semantics import PartialInterpretation
from freedl.syntax import CI, Concept, Dialect, Ontology, Signature, nominal, signature_of

logger = logging.getLogger("flask.app")

KR_SIGMA_1 = "KRConf,hasLoc,VirtualLoc"
KR_SIGMA_2 = "KREvent,hasLoc,VirtualLoc"
KR_SIGMA_3 = "KRConf,hasPCM,isGCof,dl20"
KR_SIGMA_4 = "KRConf,hasRC,hasPCM,isGCof,dl20"
KR_WITNESS = "(KRConf and (some hasPCM.{iota some isGCof.{dl20}} and not some hasRC.top))"


def data_text(filename: str) -> str:
    """Contents of a packaged data file"""
    return resources.files("freedl").joinpath("data", filename).read_text(encoding="utf-8")


def load_ontology(filename: str) -> Ontology:
    """Parses a packaged .onto file"""
    return parse_ontology(data_text(filename))


def load_interpretation(filename: str) -> PartialInterpretation:
    """Reads a packaged .interp.json file"""
    return PartialInterpretation.from_json(data_text(filename))


def sigma_for(ontology: Ontology, listing: str) -> Signature:
    """Σ listing resolved against the ontology"""
    return Signature.from_listing(listing, signature_of(ontology))


@dataclass
class Golden:
    """A worked example and its expected verdict"""

    name: str
    description: str
    check: Callable[[], bool]
    expected: bool


@dataclass
class GoldenResult:
    """Outcome of running one golden"""

    name: str
    expected: bool
    actual: Optional[bool]
    seconds: float
    error: str = ""

    @property
    def passed(self) -> bool:
        """The verdict matched"""
        return self.actual == self.expected

    def to_dict(self) -> dict:
        """Serializes the result into a dictionary"""
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "error": self.error,
        }


GOLDENS: List[Golden] = []


def golden(name: str, description: str, expected: bool = True):
    """Registers a check function as a golden"""

    def register(function: Callable[[], bool]) -> Callable[[], bool]:
        GOLDENS.append(Golden(name, description, function, expected))
        return function

    return register


######################################################################
#  K R   E V E N T S
######################################################################
def _both_ways(ontology: Ontology, individual: str, concept: Union[Concept, str], entail=alcouiota_entail) -> bool:
    if isinstance(concept, str):
        concept = parse_concept(concept)
    target = nominal(individual)
    return entail(ontology, CI(target, concept)) and entail(ontology, CI(concept, target))


@golden("kr-entailment", "O entails {kr20} equiv KRConf and some hasLoc.VirtualLoc")
def kr_entailment() -> bool:
    return _both_ways(load_ontology("kr.onto"), "kr20", "(KRConf and some hasLoc.VirtualLoc)")


@golden("kr-sigma1-elo", "kr20 has an ELOuI RE over Sigma1")
def kr_sigma1_elo() -> bool:
    ontology = load_ontology("kr_elo.onto")
    return elo_re_exists(ontology, "kr20", sigma_for(ontology, KR_SIGMA_1))


@golden("kr-sigma1-enumerated", "bounded enumeration finds the Sigma1 RE")
def kr_sigma1_enumerated() -> bool:
    ontology = load_ontology("kr_elo.onto")
    found = enumerate_re(ontology, "kr20", sigma_for(ontology, KR_SIGMA_1), Dialect.ELO, max_size=4)
    return found is not None and _both_ways(ontology, "kr20", found, elo_entail)


@golden("kr-sigma2-fo", "kr20 has no RE in any language over Sigma2", expected=False)
def kr_sigma2_fo() -> bool:
    ontology = load_ontology("kr.onto")
    return fo_re_exists(ontology, "kr20", sigma_for(ontology, KR_SIGMA_2))


@golden("kr-sigma3-fo", "kr20 has no RE over Sigma3", expected=False)
def kr_sigma3_fo() -> bool:
    ontology = load_ontology("kr.onto")
    return fo_re_exists(ontology, "kr20", sigma_for(ontology, KR_SIGMA_3))


@golden("kr-sigma4-fo", "kr20 is implicitly definable over Sigma4")
def kr_sigma4_fo() -> bool:
    ontology = load_ontology("kr.onto")
    return fo_re_exists(ontology, "kr20", sigma_for(ontology, KR_SIGMA_4))


@golden("kr-sigma4-witness", "the ALCOuI Sigma4 RE is entailed both ways")
def kr_sigma4_witness() -> bool:
    return _both_ways(load_ontology("kr.onto"), "kr20", KR_WITNESS)


@golden("kr19-denotation", "O is satisfiable and does not entail that kr19 denotes")
def kr19_denotation() -> bool:
    ontology = load_ontology("kr.onto")
    return alcouiota_sat(ontology, route="direct") and not alcouiota_entail(ontology, parse_axiom("top sub some u.{kr19}."))


######################################################################
#  I M P L I C I T   B U T   N O T   E X P L I C I T
######################################################################
@golden("jiuntcons-fo", "a is implicitly definable from {A, r}")
def jiuntcons_fo() -> bool:
    ontology = load_ontology("jiuntcons.onto")
    return fo_re_exists(ontology, "a", sigma_for(ontology, "A,r"))


@golden("jiuntcons-bisim", "a and e are ALCOuI({A, r}) bisimilar in the depicted model")
def jiuntcons_bisim() -> bool:
    interp = load_interpretation("jiuntcons.interp.json")
    sigma = Signature(concepts=frozenset({"A"}), roles=frozenset({"r"}))
    return alcouiota_bisim(interp, "a", interp, "e", sigma)


@golden("jiuntcons-enumerated", "no RE for a up to role depth 3", expected=False)
def jiuntcons_enumerated() -> bool:
    ontology = load_ontology("jiuntcons.onto")
    return enumerate_re(ontology, "a", sigma_for(ontology, "A,r"), Dialect.ALCO, max_size=5, depth=3) is not None


@golden("jiuntcons-alco", "a has no ALCOuI RE over {A, r}", expected=False)
def jiuntcons_alco() -> bool:
    ontology = load_ontology("jiuntcons.onto")
    return alco_re_exists(ontology, "a", sigma_for(ontology, "A,r"))


@golden("eloiota-fo", "a is implicitly definable from {b, B}")
def eloiota_fo() -> bool:
    ontology = load_ontology("eloiota.onto")
    return fo_re_exists(ontology, "a", sigma_for(ontology, "b,B"))


@golden("eloiota-entailment", "O entails {a} equiv {b} and some u.B")
def eloiota_entailment() -> bool:
    return _both_ways(load_ontology("eloiota.onto"), "a", "({b} and some u.B)", elo_entail)


@golden("eloiota-simulation-u", "b in I is not ELOu({b, B}) simulated by b in J", expected=False)
def eloiota_simulation_u() -> bool:
    sigma = Signature(concepts=frozenset({"B"}), individuals=frozenset({"b"}))
    i, j = load_interpretation("eloiota_i.interp.json"), load_interpretation("eloiota_j.interp.json")
    return elou_simulates(i, "b", j, "b", sigma)


@golden("eloiota-simulation", "without u the simulation exists")
def eloiota_simulation() -> bool:
    sigma = Signature(concepts=frozenset({"B"}), individuals=frozenset({"b"}))
    i, j = load_interpretation("eloiota_i.interp.json"), load_interpretation("eloiota_j.interp.json")
    return elou_simulates(i, "b", j, "b", sigma, universal=False)


@golden("eloiota-enumerated", "no ELOI RE for a without u up to depth 3", expected=False)
def eloiota_enumerated() -> bool:
    ontology = load_ontology("eloiota.onto")
    sigma = sigma_for(ontology, "b,B")
    return enumerate_re(ontology, "a", sigma, Dialect.ELO, max_size=5, depth=3, universal=False) is not None


######################################################################
#  C O U N T I N G
######################################################################
@golden("two-three-bisim", "two and three A elements are ALCOuI({A}) bisimilar with the full relation")
def two_three_bisim() -> bool:
    i, j = load_interpretation("two_three_a_i.interp.json"), load_interpretation("two_three_a_j.interp.json")
    sigma = Signature(concepts=frozenset({"A"}))
    full = {(d, e) for d in i.domain for e in j.domain}
    return alcouiota_bisim(i, "d", j, "e", sigma) and set(alcouiota_relation(i, j, sigma)) == full


######################################################################
#  R U N N E R
######################################################################
def run_goldens(names: Optional[List[str]] = None) -> List[GoldenResult]:
    """Runs the goldens (all of them, or the named ones) in order"""
    results = []
    for item in GOLDENS:
        if names and item.name not in names:
            continue
        started = time.perf_counter()
        try:
            actual: Optional[bool] = bool(item.check())
            error = ""
        except ReasonerError as exc:
            actual, error = None, f"{type(exc).__name__}: {exc}"
        result = GoldenResult(item.name, item.expected, actual, time.perf_counter() - started, error)
        log = logger.info if result.passed else logger.error
        log("Golden %s: expected %s, got %s (%.2fs)", item.name, item.expected, actual, result.seconds)
        results.append(result)
    return results
