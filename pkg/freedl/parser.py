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
Ontology Parser

Parses the ASCII surface syntax into the abstract syntax of freedl.syntax.
The grammar is LALR(1); sugar (or, implies, all, multi-term nominals,
equiv) is removed while the tree is transformed.
"""
import logging
from typing import List, Optional, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from freedl.common.errors import DialectError, ParseError
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
    Implies,
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
    TermEquality,
    Top,
    detect_dialect,
    dialect_violation,
    equivalence,
    render,
    unique,
)

logger = logging.getLogger("flask.app")

GRAMMAR = r"""
    start: statement*

    ?statement: formula "."                     -> single
              | concept "equiv" concept "."     -> equivalence

    ?formula: concept "sub" concept             -> inclusion
            | concept "(" term ")"              -> concept_assertion
            | LOWER "(" term "," term ")"       -> role_assertion
            | term "=" term                     -> term_equality
            | "not" "[" inner "]"               -> negated_formula
            | "[" inner "and" inner "]"         -> conjunction

    ?inner: formula
          | concept "equiv" concept             -> nested_equivalence

    ?concept: "top"                             -> top
            | "bot"                             -> bot
            | "etop"                            -> etop
            | NAME                              -> name
            | "{" term ("," term)* "}"          -> nominal
            | "not" concept                     -> negation
            | "(" concept "and" concept ")"     -> conj
            | "(" concept "or" concept ")"      -> disj
            | "(" concept "implies" concept ")" -> impl
            | "some" role "." concept           -> some
            | "all" role "." concept            -> only

    ?role: LOWER                                -> role_name
         | "u"                                  -> universal

    ?term: LOWER                                -> individual
         | "iota" concept                       -> iota

    NAME: /[A-Z][A-Za-z0-9_']*/
    LOWER: /[a-z][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=False)


######################################################################
#  T R E E   T R A N S F O R M E R
######################################################################
class AstBuilder(Transformer):
    """Turns the lark parse tree into freedl.syntax values"""

    # pylint: disable=missing-function-docstring

    def __init__(self):
        super().__init__()
        # surface operators of the current statement that become negations
        self._negating = []

    def _surface(self) -> tuple:
        negating, self._negating = tuple(self._negating), []
        return negating

    @v_args(meta=True)
    def start(self, _meta, statements):
        return list(statements)

    @v_args(meta=True)
    def single(self, meta, children):
        return ((children[0],), meta.line, meta.column, self._surface())

    @v_args(meta=True)
    def equivalence(self, meta, children):
        return (equivalence(children[0], children[1]), meta.line, meta.column, self._surface())

    @v_args(inline=True)
    def inclusion(self, lhs, rhs):
        return CI(lhs, rhs)

    @v_args(inline=True)
    def concept_assertion(self, concept, term):
        return ConceptAssertion(concept, term)

    @v_args(inline=True)
    def role_assertion(self, role, subject, obj):
        return RoleAssertion(str(role), subject, obj)

    @v_args(inline=True)
    def term_equality(self, left, right):
        return TermEquality(left, right)

    @v_args(inline=True)
    def negated_formula(self, formula):
        return NegatedFormula(formula)

    @v_args(inline=True)
    def conjunction(self, left, right):
        return Conjunction((left, right))

    @v_args(inline=True)
    def nested_equivalence(self, left, right):
        return Conjunction(equivalence(left, right))

    def top(self, _):
        return Top()

    def bot(self, _):
        return Bot()

    def etop(self, _):
        return ExistenceTop()

    @v_args(inline=True)
    def name(self, token):
        return Name(str(token))

    def nominal(self, terms):
        if len(terms) > 1:
            self._negating.append("{...} with several individuals")
        concept = Nominal(terms[-1])
        for term in reversed(terms[:-1]):
            concept = Or(Nominal(term), concept)
        return concept

    @v_args(inline=True)
    def negation(self, operand):
        self._negating.append("not")
        return Not(operand)

    @v_args(inline=True)
    def conj(self, left, right):
        return And((left, right))

    @v_args(inline=True)
    def disj(self, left, right):
        self._negating.append("or")
        return Or(left, right)

    @v_args(inline=True)
    def impl(self, left, right):
        self._negating.append("implies")
        return Implies(left, right)

    @v_args(inline=True)
    def some(self, role, filler):
        return Exists(role, filler)

    @v_args(inline=True)
    def only(self, role, filler):
        self._negating.append("all")
        return Forall(role, filler)

    @v_args(inline=True)
    def role_name(self, token):
        return Role(str(token))

    def universal(self, _):
        return UNIVERSAL

    @v_args(inline=True)
    def individual(self, token):
        return Individual(str(token))

    @v_args(inline=True)
    def iota(self, body):
        return Iota(body)


######################################################################
#  E N T R Y   P O I N T S
######################################################################
def _parse(text: str, start: str = "start"):
    try:
        tree = _PARSER.parse(text, start=start)
        return AstBuilder().transform(tree)
    except UnexpectedEOF as error:
        raise ParseError("unexpected end of input", max(getattr(error, "line", 0), 0)) from error
    except UnexpectedInput as error:
        token = getattr(error, "token", None)
        found = f" '{token}'" if token is not None else ""
        raise ParseError(f"unexpected input{found}", error.line, error.column) from error
    except VisitError as error:
        if isinstance(error.orig_exc, ParseError):
            raise error.orig_exc from error
        raise


def _statements(text: str) -> List[Tuple[tuple, int, int, tuple]]:
    return _parse(text)


def parse_ontology(text: str, dialect: Optional[Dialect] = None) -> Ontology:
    """
    Parses ontology text

    When dialect is None the least expressive dialect accepting the text is
    chosen. Otherwise every axiom is checked against the requested dialect
    and a violation is reported with its position.
    """
    statements = _statements(text)
    axioms = []
    for group, line, column, negating in statements:
        if dialect is not None:
            for axiom in group:
                construct = dialect_violation(axiom, dialect)
                if construct == "not" and negating:
                    construct = negating[0]
                if construct:
                    raise DialectError(
                        f"{line}:{column}: '{construct}' is not allowed in dialect "
                        f"{dialect.value}: {render(axiom)}"
                    )
        axioms.extend(group)
    chosen = dialect if dialect is not None else detect_dialect(axioms)
    logger.debug("Parsed %d axioms in dialect %s", len(axioms), chosen.value)
    return Ontology(chosen, unique(axioms))


def parse_axioms(text: str) -> list:
    """Parses one or more axioms without dialect checking"""
    axioms = []
    for group, *_ in _statements(text):
        axioms.extend(group)
    return axioms


def parse_axiom(text: str):
    """Parses exactly one axiom; a trailing '.' is optional"""
    stripped = text.strip()
    if not stripped.endswith("."):
        stripped += "."
    axioms = parse_axioms(stripped)
    if len(axioms) == 1:
        return axioms[0]
    raise ParseError(f"expected one axiom, found {len(axioms)}")


def parse_concept(text: str) -> Concept:
    """Parses a single concept"""
    axiom = parse_axiom(f"{text} sub top")
    if not isinstance(axiom, CI):
        raise ParseError(f"not a concept: {text}")
    return axiom.lhs


def parse_term(text: str):
    """Parses a single term"""
    axiom = parse_axiom(f"top({text})")
    if not isinstance(axiom, ConceptAssertion):
        raise ParseError(f"not a term: {text}")
    return axiom.term
