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
freedl Command Line

The ``freedl`` console script. Every reasoning command prints a report and
exits with one of the codes in freedl.common.status:

    0  positive verdict or success
    1  negative verdict
    2  parse, dialect, shape or input error
    3  budget exceeded or undecided regime
"""
import io
import json
import logging
import shlex
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from functools import wraps
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from freedl import config
from freedl.alcou_sat import alcouiota_entail, alcouiota_model, alcouiota_sat
from freedl.bisim import alco_bisim, alcouiota_relation, elou_simulation
from freedl.common import status
from freedl.common.errors import ReasonerError, ResourceExceeded, UndecidedRegime
from freedl.common.log_handlers import init_cli_logging
from freedl.dual_domain import boxcircle_translate, dd_sat, polarity_of
from freedl.elo_engine import classify, elo_entail, elo_model, saturate
from freedl.goldens import run_goldens
from freedl.normalize import alco_normal_form, elo_normal_form, eliminate_assertions, flatten
from freedl.oracle import oracle_dd_sat, oracle_entail, oracle_sat
from freedl.parser import parse_axiom, parse_ontology
from freedl.re_exist import LANGUAGES, alco_re_exists, enumerate_re, joint_consistency, re_exists
from freedl.semantics import PartialInterpretation, violated_axioms
from freedl.syntax import Dialect, Name, Ontology, Signature, detect_dialect, render, signature_of
from freedl.translate import abstract_individuals, add_denotation_axioms, dagger, downde

logger = logging.getLogger("flask.app")

NORMAL_FORMS = {
    "assertions": eliminate_assertions,
    "flatten": flatten,
    "elo-nf": elo_normal_form,
    "alco-nf": alco_normal_form,
}

TRANSLATIONS = {
    "dagger": dagger,
    "downde": downde,
    "abstract-individuals": abstract_individuals,
    "denotation-axioms": add_denotation_axioms,
}

VERBOSITY = [logging.WARNING, logging.INFO, logging.DEBUG]


######################################################################
#  R E P O R T S
######################################################################
@dataclass
class Report:
    """What a command found: printed as text or as the --json document"""

    command: str
    inputs: Dict[str, Any]
    verdict: Optional[bool] = None
    witness: Any = None
    text: str = ""
    code: Optional[int] = None

    def exit_code(self) -> int:
        """Maps the verdict to a process exit code"""
        if self.code is not None:
            return self.code
        return status.EXIT_NEGATIVE if self.verdict is False else status.EXIT_POSITIVE

    def to_dict(self, seconds: float) -> dict:
        """Serializes the report into the --json document"""
        document = {"command": self.command, "inputs": self.inputs, "verdict": self.verdict}
        if self.witness is not None:
            document["witness"] = self.witness
        document["timings"] = {"seconds": round(seconds, 6)}
        return document


def _emit(ctx: click.Context, report: Report, seconds: float) -> None:
    if ctx.obj.get("json"):
        click.echo(json.dumps(report.to_dict(seconds), indent=2, ensure_ascii=False))
    elif report.text:
        click.echo(report.text.rstrip("\n"))
    ctx.exit(report.exit_code())


def _fail(ctx: click.Context, command: str, error: Exception, code: int, seconds: float) -> None:
    logger.debug("%s failed: %r", command, error)
    if ctx.obj.get("json"):
        document = {
            "command": command,
            "inputs": dict(ctx.params),
            "verdict": None,
            "error": f"{type(error).__name__}: {error}",
            "timings": {"seconds": round(seconds, 6)},
        }
        click.echo(json.dumps(document, indent=2, ensure_ascii=False))
    click.echo(f"Error: {error}", err=True)
    ctx.exit(code)


def reasoner_command(function):
    """Runs a command body that returns a Report and maps failures to exit codes"""

    @wraps(function)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        started = time.perf_counter()
        try:
            report = function(*args, **kwargs)
        except (ResourceExceeded, UndecidedRegime) as error:
            _fail(ctx, ctx.command_path, error, status.EXIT_RESOURCE, time.perf_counter() - started)
            return
        except (ReasonerError, ValueError, OSError) as error:
            _fail(ctx, ctx.command_path, error, status.EXIT_ERROR, time.perf_counter() - started)
            return
        _emit(ctx, report, time.perf_counter() - started)

    return wrapper


######################################################################
#  I N P U T S
######################################################################
def read_ontology(path: str, dialect: Optional[str] = None) -> Ontology:
    """Parses an .onto file, checking it against the dialect when one is given"""
    text = Path(path).read_text(encoding="utf-8")
    return parse_ontology(text, Dialect(dialect) if dialect else None)


def read_interpretation(path: str) -> PartialInterpretation:
    """Loads an .interp.json file"""
    return PartialInterpretation.from_json(Path(path).read_text(encoding="utf-8"))


def verdict_word(verdict: Optional[bool], yes: str, no: str) -> str:
    """Human-readable verdict"""
    return yes if verdict else no


def ontology_options(function):
    """The -o/--ontology and --dialect options shared by most commands"""
    function = click.option(
        "--dialect",
        type=click.Choice([d.value for d in Dialect]),
        default=None,
        help="Check the input against this dialect instead of detecting it",
    )(function)
    function = click.option(
        "-o",
        "--ontology",
        "ontology_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False),
        help="Ontology file in the .onto text format",
    )(function)
    return function


def mode_option(function):
    """--mode partial|total"""
    return click.option(
        "--mode", type=click.Choice(["partial", "total"]), default="partial", show_default=True
    )(function)


######################################################################
#  T H E   G R O U P
######################################################################
@click.group()
@click.option("--json", "as_json", is_flag=True, help="Print machine-readable reports")
@click.option("-v", "--verbose", count=True, help="Log to stderr (repeat for debug)")
@click.version_option(package_name="freedl")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, verbose: int):
    """Reasoning with definite descriptions in free description logics"""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    init_cli_logging(VERBOSITY[min(verbose, len(VERBOSITY) - 1)])


######################################################################
#  S Y N T A X
######################################################################
@cli.command("parse")
@ontology_options
@reasoner_command
def parse_command(ontology_path, dialect):
    """Parse an ontology and print it back with its dialect"""
    ontology = read_ontology(ontology_path, dialect)
    return Report(
        "parse",
        {"ontology": ontology_path},
        witness={"dialect": ontology.dialect.value, "axioms": [render(ax) for ax in ontology]},
        text=f"# dialect: {ontology.dialect.value}\n{render(ontology)}",
    )


@cli.command("normalize")
@ontology_options
@click.option("--assertions", "form", flag_value="assertions", help="Eliminate assertions")
@click.option("--flatten", "form", flag_value="flatten", help="Name every complex subconcept")
@click.option("--elo-nf", "form", flag_value="elo-nf", help="ELOuι normal form")
@click.option("--alco-nf", "form", flag_value="alco-nf", help="ALCOuι normal form")
@reasoner_command
def normalize_command(ontology_path, dialect, form):
    """Rewrite an ontology into a normal form"""
    if not form:
        raise click.UsageError("choose one of --assertions, --flatten, --elo-nf or --alco-nf")
    ontology = read_ontology(ontology_path, dialect)
    result = NORMAL_FORMS[form](ontology)
    logger.info("Normal form %s: %d axioms in, %d out", form, len(ontology), len(result))
    return Report(
        "normalize",
        {"ontology": ontology_path, "form": form},
        witness={"axioms": [render(ax) for ax in result]},
        text=render(result),
    )


@cli.command("translate")
@ontology_options
@click.option("--dagger", "translation", flag_value="dagger", help="Total semantics via fresh nominals")
@click.option("--downde", "translation", flag_value="downde", help="Relativize to an existence concept")
@click.option("--abstract-individuals", "translation", flag_value="abstract-individuals")
@click.option("--denotation-axioms", "translation", flag_value="denotation-axioms")
@click.option("--boxcircle", "polarity", type=click.Choice(["+", "-", "pos", "neg"]), help="Dual-domain formula")
@reasoner_command
def translate_command(ontology_path, dialect, translation, polarity):
    """Apply one of the ontology translations"""
    if bool(translation) == (polarity is not None):
        raise click.UsageError("choose exactly one translation")
    ontology = read_ontology(ontology_path, dialect)
    if polarity is not None:
        result = boxcircle_translate(ontology, polarity)
        translation = f"boxcircle{polarity_of(polarity)}"
    else:
        result = TRANSLATIONS[translation](ontology)
    return Report(
        "translate",
        {"ontology": ontology_path, "translation": translation},
        witness={"dialect": result.dialect.value, "axioms": [render(ax) for ax in result]},
        text=render(result),
    )


######################################################################
#  S A T I S F I A B I L I T Y   A N D   E N T A I L M E N T
######################################################################
@cli.command("sat")
@ontology_options
@mode_option
@click.option("--route", type=click.Choice(["direct", "translation"]), default=None, help="ALCOuι decision route")
@click.option("--witness", is_flag=True, help="Also build a model")
@reasoner_command
def sat_command(ontology_path, dialect, mode, route, witness):
    """Decide satisfiability of an ontology"""
    ontology = read_ontology(ontology_path, dialect)
    model: Optional[PartialInterpretation] = None
    if ontology.dialect == Dialect.ELO and mode == "partial":
        canonical = elo_model(ontology)
        verdict = canonical is not None
        model = canonical.interp if canonical else None
    else:
        verdict = alcouiota_sat(ontology, mode=mode, route=route)
        if witness and verdict:
            model = alcouiota_model(ontology, mode=mode)
    return Report(
        "sat",
        {"ontology": ontology_path, "mode": mode, "route": route or config.SAT_ROUTE},
        verdict,
        witness=model.to_dict() if witness and model else None,
        text=verdict_word(verdict, "satisfiable", "unsatisfiable") + (f"\n{model.to_json()}" if witness and model else ""),
    )


@cli.command("entail")
@ontology_options
@mode_option
@click.option("-a", "--axiom", "axiom_text", required=True, help="Axiom in the .onto syntax")
@reasoner_command
def entail_command(ontology_path, dialect, mode, axiom_text):
    """Decide whether the ontology entails an axiom"""
    ontology = read_ontology(ontology_path, dialect)
    axiom = parse_axiom(axiom_text)
    if ontology.dialect == Dialect.ELO and detect_dialect([axiom]) == Dialect.ELO and mode == "partial":
        verdict = elo_entail(ontology, axiom)
    else:
        verdict = alcouiota_entail(ontology, axiom, mode=mode)
    return Report(
        "entail",
        {"ontology": ontology_path, "axiom": render(axiom), "mode": mode},
        verdict,
        text=verdict_word(verdict, "entailed", "not entailed"),
    )


######################################################################
#  E L O U ι
######################################################################
@cli.command("classify")
@ontology_options
@reasoner_command
def classify_command(ontology_path, dialect):
    """Subsumers of every concept name of an ELOuι ontology"""
    hierarchy = classify(read_ontology(ontology_path, dialect))
    lines = [f"{name}: {', '.join(subsumers)}" for name, subsumers in hierarchy.items()]
    return Report("classify", {"ontology": ontology_path}, witness=hierarchy, text="\n".join(lines))


@cli.command("canonical-model")
@ontology_options
@click.option("-t", "--target", default=None, help="Concept name at the root (default: a fresh ⊤ name)")
@click.option("--graph", is_flag=True, help="Print the classification graph report instead")
@reasoner_command
def canonical_model_command(ontology_path, dialect, target, graph):
    """Build the canonical model of an ELOuι ontology"""
    ontology = read_ontology(ontology_path, dialect)
    inputs = {"ontology": ontology_path, "target": target}
    if graph:
        if target is None:
            raise click.UsageError("--graph needs --target")
        completed = saturate(elo_normal_form(ontology), Name(target))
        return Report("canonical-model", inputs, not completed.unsatisfiable(), text=completed.report())
    model = elo_model(ontology, target)
    if model is None:
        return Report("canonical-model", inputs, False, text="no canonical model: the target is unsatisfiable")
    return Report(
        "canonical-model",
        inputs,
        True,
        witness={"interpretation": model.interp.to_dict(), "target": model.target_element, "classes": model.class_of},
        text=model.interp.to_json(),
    )


######################################################################
#  M O D E L S
######################################################################
@cli.command("model-check")
@ontology_options
@click.option("-m", "--model", "model_path", required=True, type=click.Path(exists=True, dir_okay=False))
@reasoner_command
def model_check_command(ontology_path, dialect, model_path):
    """Check an interpretation against every axiom of an ontology"""
    ontology = read_ontology(ontology_path, dialect)
    failing = violated_axioms(read_interpretation(model_path), ontology)
    verdict = not failing
    lines = [verdict_word(verdict, "model", "not a model")] + [f"violated: {render(ax)}" for ax in failing]
    return Report(
        "model-check",
        {"ontology": ontology_path, "model": model_path},
        verdict,
        witness={"violated": [render(ax) for ax in failing]} if failing else None,
        text="\n".join(lines),
    )


def _interpretation_signature(*interps: PartialInterpretation) -> Signature:
    return Signature(
        concepts=frozenset(name for i in interps for name in i.concepts),
        roles=frozenset(name for i in interps for name in i.roles),
        individuals=frozenset(name for i in interps for name in i.individuals),
    )


@cli.command("bisim")
@click.option("--left", "left_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--right", "right_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-d", "--left-element", "d", required=True)
@click.option("-e", "--right-element", "e", required=True)
@click.option("--sigma", required=True, help="Comma separated Σ listing")
@click.option("--flavor", type=click.Choice(["alco", "alcoui", "elou-sim"]), default="alcoui", show_default=True)
@click.option("--universal/--no-universal", default=True, help="Left totality for elou-sim")
@reasoner_command
def bisim_command(left_path, right_path, d, e, sigma, flavor, universal):
    """Decide (I, d) ~ (J, e) for a Σ bisimulation or simulation"""
    left, right = read_interpretation(left_path), read_interpretation(right_path)
    signature = Signature.from_listing(sigma, _interpretation_signature(left, right))
    if flavor == "alco":
        relation = alco_bisim(left, right, signature)
    elif flavor == "alcoui":
        relation = alcouiota_relation(left, right, signature)
    else:
        relation = elou_simulation(left, right, signature, universal)
    verdict = (d, e) in relation
    return Report(
        "bisim",
        {"left": left_path, "right": right_path, "d": d, "e": e, "sigma": signature.listing(), "flavor": flavor},
        verdict,
        witness={"relation": sorted([list(pair) for pair in relation])} if verdict else None,
        text=verdict_word(verdict, "related", "not related"),
    )


######################################################################
#  R E F E R R I N G   E X P R E S S I O N S
######################################################################
@cli.command("re-exists")
@ontology_options
@click.option("-i", "--individual", required=True)
@click.option("--sigma", required=True, help="Comma separated Σ listing")
@click.option("--language", type=click.Choice(LANGUAGES), default="alco", show_default=True)
@click.option("--budget", type=int, default=None, help="Mosaic pairs per candidate set")
@click.option("--branch-limit", type=int, default=None, help="Mosaic search branches")
@click.option("--enumerate", "find", is_flag=True, help="Search for an expression by size when one exists")
@click.option("--max-size", type=int, default=None)
@click.option("--depth", type=int, default=None)
@reasoner_command
def re_exists_command(ontology_path, dialect, individual, sigma, language, budget, branch_limit, find, max_size, depth):
    """Decide whether a Σ referring expression for an individual exists"""
    # pylint: disable=too-many-arguments
    ontology = read_ontology(ontology_path, dialect)
    signature = Signature.from_listing(sigma, signature_of(ontology))
    witness: Optional[dict] = None
    if language == "alco" and individual not in signature.individuals:
        state = joint_consistency(ontology, individual, signature, budget, branch_limit)
        verdict = state is None
        witness = state.to_dict() if state else None
    elif language == "alco":
        verdict = alco_re_exists(ontology, individual, signature)
    else:
        verdict = re_exists(ontology, individual, signature, language)
    lines = [verdict_word(verdict, "exists", "does not exist")]
    if verdict and find:
        found = enumerate_re(
            ontology,
            individual,
            signature,
            Dialect.ELO if language == "elo" else Dialect.ALCO,
            max_size=max_size,
            depth=depth,
        )
        witness = {"expression": render(found) if found else None}
        lines.append(f"expression: {render(found)}" if found else "no expression within the size bound")
    return Report(
        "re-exists",
        {"ontology": ontology_path, "individual": individual, "sigma": signature.listing(), "language": language},
        verdict,
        witness=witness,
        text="\n".join(lines),
    )


######################################################################
#  D U A L - D O M A I N
######################################################################
@cli.command("dd-sat")
@click.option("-o", "--ontology", "ontology_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--polarity", type=click.Choice(["+", "-", "pos", "neg"]), default="pos", show_default=True)
@reasoner_command
def dd_sat_command(ontology_path, polarity):
    """Decide satisfiability of an ALCOι* formula on dual-domain interpretations"""
    formula = read_ontology(ontology_path)
    verdict = dd_sat(formula, polarity)
    return Report(
        "dd-sat",
        {"ontology": ontology_path, "polarity": polarity_of(polarity)},
        verdict,
        text=verdict_word(verdict, "satisfiable", "unsatisfiable"),
    )


######################################################################
#  O R A C L E
######################################################################
@cli.group("oracle")
def oracle_group():
    """Brute-force model enumeration up to a domain bound"""


@oracle_group.command("sat")
@ontology_options
@mode_option
@click.option("--max-domain", type=int, default=3, show_default=True)
@click.option("--budget", type=int, default=None, help="Interpretations to try")
@reasoner_command
def oracle_sat_command(ontology_path, dialect, mode, max_domain, budget):
    """Search for a model up to --max-domain elements"""
    model = oracle_sat(read_ontology(ontology_path, dialect), max_domain, mode=mode, budget=budget)
    verdict = model is not None
    return Report(
        "oracle sat",
        {"ontology": ontology_path, "mode": mode, "max_domain": max_domain},
        verdict,
        witness=model.to_dict() if model else None,
        text=model.to_json() if model else f"no model up to {max_domain} elements",
    )


@oracle_group.command("entail")
@ontology_options
@mode_option
@click.option("-a", "--axiom", "axiom_text", required=True)
@click.option("--max-domain", type=int, default=3, show_default=True)
@click.option("--budget", type=int, default=None, help="Interpretations to try")
@reasoner_command
def oracle_entail_command(ontology_path, dialect, mode, axiom_text, max_domain, budget):
    """Search for a countermodel up to --max-domain elements"""
    axiom = parse_axiom(axiom_text)
    countermodel = oracle_entail(read_ontology(ontology_path, dialect), axiom, max_domain, mode=mode, budget=budget)
    verdict = countermodel is None
    return Report(
        "oracle entail",
        {"ontology": ontology_path, "axiom": render(axiom), "mode": mode, "max_domain": max_domain},
        verdict,
        witness=countermodel.to_dict() if countermodel else None,
        text=f"entailed up to {max_domain} elements" if verdict else countermodel.to_json(),
    )


@oracle_group.command("dd-sat")
@click.option("-o", "--ontology", "ontology_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--polarity", type=click.Choice(["+", "-", "pos", "neg"]), default="pos", show_default=True)
@click.option("--max-outer", type=int, default=3, show_default=True)
@click.option("--budget", type=int, default=None, help="Interpretations to try")
@reasoner_command
def oracle_dd_sat_command(ontology_path, polarity, max_outer, budget):
    """Search for a dual-domain model up to --max-outer elements"""
    model = oracle_dd_sat(read_ontology(ontology_path), polarity, max_outer, budget=budget)
    verdict = model is not None
    return Report(
        "oracle dd-sat",
        {"ontology": ontology_path, "polarity": polarity_of(polarity), "max_outer": max_outer},
        verdict,
        witness=model.to_dict() if model else None,
        text=json.dumps(model.to_dict(), indent=2) if model else f"no model up to {max_outer} outer elements",
    )


######################################################################
#  S E L F T E S T   A N D   B A T C H
######################################################################
@cli.command("selftest")
@click.option("--only", multiple=True, help="Run only the named golden (repeatable)")
@reasoner_command
def selftest_command(only):
    """Run the worked-example golden suite"""
    results = run_goldens(list(only) or None)
    verdict = all(result.passed for result in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.2f}s){' ' + r.error if r.error else ''}" for r in results
    ]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return Report(
        "selftest", {"only": list(only)}, verdict, witness=[r.to_dict() for r in results], text="\n".join(lines)
    )


def run_batch_item(line: str) -> dict:
    """Runs one argument line in isolation and captures its output"""
    argv = shlex.split(line)
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = cli.main(args=argv, prog_name="freedl", standalone_mode=False)
        except click.ClickException as error:
            error.show()
            code = error.exit_code
        except click.Abort:
            code = status.EXIT_ERROR
    return {
        "line": line,
        "exit": status.EXIT_POSITIVE if code is None else code,
        "stdout": out.getvalue(),
        "stderr": err.getvalue(),
    }


def batch_code(codes: List[int]) -> int:
    """Errors dominate resource failures; verdicts alone mean success"""
    if status.EXIT_ERROR in codes:
        return status.EXIT_ERROR
    if status.EXIT_RESOURCE in codes:
        return status.EXIT_RESOURCE
    return status.EXIT_POSITIVE


@cli.command("batch")
@click.argument("batch_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--workers", type=int, default=None, help="Worker processes (default: FREEDL_WORKERS)")
@reasoner_command
def batch_command(batch_file, workers):
    """Run one freedl argument line per item on a process pool"""
    lines = [
        line.strip()
        for line in Path(batch_file).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    workers = workers or config.WORKERS
    logger.info("Running %d batch items on %d workers", len(lines), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        items = list(pool.map(run_batch_item, lines))
    text = []
    for index, item in enumerate(items, start=1):
        text.append(f"[{index}] exit {item['exit']}: {item['line']}")
        text.extend("    " + row for row in (item["stdout"] + item["stderr"]).splitlines())
    return Report(
        "batch",
        {"batch": batch_file, "workers": workers},
        witness=items,
        text="\n".join(text),
        code=batch_code([item["exit"] for item in items]),
    )


def main(argv: Optional[List[str]] = None) -> None:
    """Console script entry point"""
    cli.main(args=argv, prog_name="freedl")
