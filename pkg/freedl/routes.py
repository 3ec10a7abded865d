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
Reasoner Service

This service exposes the reasoning tasks as a JSON REST API. Every POST
takes a JSON body whose "ontology" member is ontology text in the .onto
syntax and returns {command, verdict, witness?}.
"""

from flask import jsonify, request, abort
from flask import current_app as app  # Import Flask application
from freedl import config
from freedl.alcou_sat import alcouiota_entail, alcouiota_sat
from freedl.bisim import alco_bisim, alcouiota_relation, elou_simulation
from freedl.common import status  # HTTP Status Codes
from freedl.dual_domain import dd_sat, polarity_of
from freedl.elo_engine import classify, elo_entail
from freedl.parser import parse_axiom, parse_ontology
from freedl.re_exist import LANGUAGES, joint_consistency, re_exists
from freedl.semantics import PartialInterpretation, violated_axioms
from freedl.syntax import Dialect, Signature, detect_dialect, render, signature_of

MODES = ("partial", "total")
FLAVORS = ("alco", "alcoui", "elou-sim")
ROUTES = ("direct", "translation")


######################################################################
# GET HEALTH CHECK
######################################################################
@app.route("/health")
def health_check():
    """Let them know our heart is still beating"""
    return jsonify(status="OK"), status.HTTP_200_OK


######################################################################
# GET INDEX
######################################################################
@app.route("/")
def index():
    """Describes the service and its endpoints"""
    app.logger.info("Request for Root URL")
    return (
        jsonify(
            name="freedl Reasoner REST API Service",
            version="1.0",
            dialects=[d.value for d in Dialect],
            endpoints=["/parse", "/sat", "/entail", "/classify", "/model-check", "/re-exists", "/bisim", "/dd-sat"],
        ),
        status.HTTP_200_OK,
    )


######################################################################
#  R E S T   A P I   E N D P O I N T S
######################################################################


######################################################################
# PARSE AN ONTOLOGY
######################################################################
@app.route("/parse", methods=["POST"])
def parse():
    """
    Parse an ontology
    This endpoint returns the axioms of the posted ontology and its dialect
    """
    app.logger.info("Request to Parse an ontology...")
    ontology = read_ontology(request_body())
    return verdict_response("parse", None, {"dialect": ontology.dialect.value, "axioms": [render(ax) for ax in ontology]})


######################################################################
# DECIDE SATISFIABILITY
######################################################################
@app.route("/sat", methods=["POST"])
def sat():
    """Decide satisfiability on partial or total interpretations"""
    app.logger.info("Request to decide satisfiability...")
    data = request_body()
    ontology = read_ontology(data)
    mode = choice(data, "mode", MODES)
    verdict = alcouiota_sat(ontology, mode=mode, route=choice(data, "route", ROUTES, default=config.SAT_ROUTE))
    return verdict_response("sat", verdict)


######################################################################
# DECIDE ENTAILMENT
######################################################################
@app.route("/entail", methods=["POST"])
def entail():
    """Decide whether the ontology entails the posted axiom"""
    app.logger.info("Request to decide entailment...")
    data = request_body()
    ontology = read_ontology(data)
    axiom = parse_axiom(required(data, "axiom"))
    mode = choice(data, "mode", MODES)
    if ontology.dialect == Dialect.ELO and detect_dialect([axiom]) == Dialect.ELO and mode == "partial":
        verdict = elo_entail(ontology, axiom)
    else:
        verdict = alcouiota_entail(ontology, axiom, mode=mode)
    app.logger.info("Entailment of %s: %s", render(axiom), verdict)
    return verdict_response("entail", verdict)


######################################################################
# CLASSIFY AN ELOUι ONTOLOGY
######################################################################
@app.route("/classify", methods=["POST"])
def classify_names():
    """Subsumers of every concept name"""
    app.logger.info("Request to classify an ontology...")
    hierarchy = classify(read_ontology(request_body()))
    return verdict_response("classify", None, hierarchy)


######################################################################
# CHECK A MODEL
######################################################################
@app.route("/model-check", methods=["POST"])
def model_check():
    """Check the posted interpretation against the ontology"""
    app.logger.info("Request to check a model...")
    data = request_body()
    ontology = read_ontology(data)
    failing = violated_axioms(PartialInterpretation.from_dict(required(data, "interpretation")), ontology)
    witness = {"violated": [render(ax) for ax in failing]} if failing else None
    return verdict_response("model-check", not failing, witness)


######################################################################
# DECIDE REFERRING EXPRESSION EXISTENCE
######################################################################
@app.route("/re-exists", methods=["POST"])
def referring_expression_exists():
    """
    Decide whether a Σ referring expression exists
    The body names the individual, the Σ listing and the language
    """
    app.logger.info("Request to decide referring expression existence...")
    data = request_body()
    ontology = read_ontology(data)
    individual = required(data, "individual")
    sigma = Signature.from_listing(required(data, "sigma"), signature_of(ontology))
    language = choice(data, "language", LANGUAGES, default="alco")
    witness = None
    if language == "alco" and individual not in sigma.individuals:
        state = joint_consistency(ontology, individual, sigma, data.get("budget"), data.get("branchLimit"))
        verdict = state is None
        witness = state.to_dict() if state else None
    else:
        verdict = re_exists(ontology, individual, sigma, language)
    return verdict_response("re-exists", verdict, witness)


######################################################################
# DECIDE BISIMILARITY
######################################################################
@app.route("/bisim", methods=["POST"])
def bisimilar():
    """Decide (I, d) ~ (J, e) for the posted interpretations"""
    app.logger.info("Request to decide bisimilarity...")
    data = request_body()
    left = PartialInterpretation.from_dict(required(data, "left"))
    right = PartialInterpretation.from_dict(required(data, "right"))
    reference = Signature(roles=frozenset(left.roles) | frozenset(right.roles))
    sigma = Signature.from_listing(required(data, "sigma"), reference)
    flavor = choice(data, "flavor", FLAVORS, default="alcoui")
    if flavor == "alco":
        relation = alco_bisim(left, right, sigma)
    elif flavor == "alcoui":
        relation = alcouiota_relation(left, right, sigma)
    else:
        relation = elou_simulation(left, right, sigma, bool(data.get("universal", True)))
    verdict = (required(data, "d"), required(data, "e")) in relation
    witness = {"relation": sorted([list(pair) for pair in relation])} if verdict else None
    return verdict_response("bisim", verdict, witness)


######################################################################
# DECIDE DUAL-DOMAIN SATISFIABILITY
######################################################################
@app.route("/dd-sat", methods=["POST"])
def dual_domain_sat():
    """Decide satisfiability of an ALCOι* formula under the posted polarity"""
    app.logger.info("Request to decide dual-domain satisfiability...")
    data = request_body()
    formula = read_ontology(data)
    try:
        polarity = polarity_of(data.get("polarity", "+"))
    except (ValueError, AttributeError) as error:
        abort(status.HTTP_400_BAD_REQUEST, str(error))
    return verdict_response("dd-sat", dd_sat(formula, polarity))


######################################################################
#  U T I L I T Y   F U N C T I O N S
######################################################################


def verdict_response(command: str, verdict, witness=None):
    """The JSON reply shared by every reasoning endpoint"""
    body = {"command": command, "verdict": verdict}
    if witness is not None:
        body["witness"] = witness
    return jsonify(body), status.HTTP_200_OK


def request_body() -> dict:
    """The JSON object posted with the request"""
    check_content_type("application/json")
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        abort(status.HTTP_400_BAD_REQUEST, "Request body must be a JSON object")
    app.logger.debug("Processing: %s", data)
    return data


def required(data: dict, key: str):
    """A member that must be present"""
    if key not in data:
        abort(status.HTTP_400_BAD_REQUEST, f"Missing field: {key}")
    return data[key]


def choice(data: dict, key: str, allowed, default=None):
    """An optional member restricted to a set of values"""
    value = data.get(key, default or allowed[0])
    if value not in allowed:
        abort(status.HTTP_400_BAD_REQUEST, f"{key} must be one of {', '.join(allowed)}")
    return value


def read_ontology(data: dict):
    """Parses the "ontology" member, honouring an optional "dialect" member"""
    text = required(data, "ontology")
    dialect = data.get("dialect")
    if dialect is not None and dialect not in [d.value for d in Dialect]:
        abort(status.HTTP_400_BAD_REQUEST, f"Unknown dialect: {dialect}")
    return parse_ontology(str(text), Dialect(dialect) if dialect else None)


def check_content_type(content_type) -> None:
    """Checks that the media type is correct"""
    if "Content-Type" not in request.headers:
        app.logger.error("No Content-Type specified.")
        abort(
            status.HTTP_415_UNSUPPORTED_MEDIA_TYPE,
            f"Content-Type must be {content_type}",
        )

    if request.headers["Content-Type"] == content_type:
        return

    app.logger.error("Invalid Content-Type: %s", request.headers["Content-Type"])
    abort(
        status.HTTP_415_UNSUPPORTED_MEDIA_TYPE,
        f"Content-Type must be {content_type}",
    )
