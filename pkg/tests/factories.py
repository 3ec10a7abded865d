"""
Test Factory to make random interpretations, concepts and ontologies for testing
"""
import os

import factory
from factory.random import randgen, reseed_random

from freedl.semantics import PartialInterpretation
from freedl.syntax import (
    CI,
    UNIVERSAL,
    And,
    Bot,
    Concept,
    Dialect,
    Exists,
    Name,
    Not,
    Ontology,
    Role,
    Top,
    iota_nominal,
    nominal,
)

SEED = 2820
CONCEPT_NAMES = ("A", "B")
ROLE_NAMES = ("r",)
INDIVIDUALS = ("a", "b")


def suite_size(short: int, full: int) -> int:
    """Property suite size: short by default, acceptance sized with FREEDL_SUITE_SCALE=full"""
    return full if os.getenv("FREEDL_SUITE_SCALE", "") == "full" else short


def reseed() -> None:
    """Fixed seed so property suites are reproducible"""
    reseed_random(SEED)


def random_concept(depth: int = 2, boolean: bool = True, iota: bool = False, universal: bool = True) -> Concept:
    """A random concept over the small test vocabulary"""
    choice = randgen.random()
    if depth <= 0 or choice < 0.35:
        atoms = [Top(), Name("A"), Name("B"), nominal("a"), nominal("b")]
        if boolean:
            atoms.append(Bot())
        return randgen.choice(atoms)
    if boolean and choice < 0.5:
        return Not(random_concept(depth - 1, boolean, iota, universal))
    if choice < 0.7:
        return And((random_concept(depth - 1, boolean, iota, universal), random_concept(depth - 1, boolean, iota, universal)))
    if iota and choice < 0.78:
        return iota_nominal(random_concept(depth - 1, boolean, False, universal))
    roles = [Role(name) for name in ROLE_NAMES] + ([UNIVERSAL] if universal else [])
    return Exists(randgen.choice(roles), random_concept(depth - 1, boolean, iota, universal))


def _random_extension(domain):
    return frozenset(d for d in domain if randgen.random() < 0.5)


def _random_pairs(domain):
    return frozenset((d, e) for d in domain for e in domain if randgen.random() < 0.4)


def _random_individuals(domain):
    return {a: randgen.choice(domain) for a in INDIVIDUALS if randgen.random() < 0.75}


class InterpretationFactory(factory.Factory):
    """Creates random partial interpretations"""

    class Meta:  # pylint: disable=too-few-public-methods
        """Maps factory to data model"""

        model = PartialInterpretation

    domain = factory.LazyFunction(lambda: tuple(f"d{i}" for i in range(randgen.randint(1, 3))))
    concepts = factory.LazyAttribute(lambda o: {name: _random_extension(o.domain) for name in CONCEPT_NAMES})
    roles = factory.LazyAttribute(lambda o: {name: _random_pairs(o.domain) for name in ROLE_NAMES})
    individuals = factory.LazyAttribute(lambda o: _random_individuals(o.domain))


class OntologyFactory(factory.Factory):
    """Creates random ALCOuι ontologies of one or two CIs"""

    class Meta:  # pylint: disable=too-few-public-methods
        """Maps factory to data model"""

        model = Ontology

    class Params:  # pylint: disable=too-few-public-methods
        """Generation knobs"""

        depth = 2
        iota = False

    dialect = Dialect.ALCO
    axioms = factory.LazyAttribute(
        lambda o: tuple(
            CI(random_concept(o.depth, iota=o.iota), random_concept(o.depth, iota=o.iota))
            for _ in range(randgen.randint(1, 2))
        )
    )


class EloOntologyFactory(OntologyFactory):
    """Creates random ELOuι ontologies"""

    dialect = Dialect.ELO
    axioms = factory.LazyAttribute(
        lambda o: tuple(
            CI(random_concept(o.depth, boolean=False, iota=o.iota), random_concept(o.depth, boolean=False, iota=o.iota))
            for _ in range(randgen.randint(1, 3))
        )
    )
