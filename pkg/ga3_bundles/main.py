"""
Command-line interface - argument handling ONLY.
Computation is delegated to the geometry, links and services layers; reports go to stdout,
logs to stderr.

Exit status: 0 yes / valid / success, 1 no / invalid, 2 usage error, 3 resource limit.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, TextIO

from ga3_bundles.action.candidate import (
    STANDARD_BOUNDARY,
    ActionCandidate,
    parse_base_point,
    standard_action,
)
from ga3_bundles.action.mutants import MUTANTS, build_mutant
from ga3_bundles.action.verifier import verify_all
from ga3_bundles.algebra.groebner import GroebnerLimits
from ga3_bundles.algebra.parser import parse
from ga3_bundles.config import settings
from ga3_bundles.errors import (
    GroebnerResourceError,
    LinkContractError,
    LinkPreconditionError,
    SynthesisError,
)
from ga3_bundles.geometry.bundle import (
    BundleType,
    intersection_number,
    linear_system_basis,
    parse_bundle_descriptor,
    parse_divisor_class,
    section_count,
)
from ga3_bundles.links.rational_map import link_map
from ga3_bundles.links.synthesis import synthesize
from ga3_bundles.links.transport import multiplicity_along_center, plan_links, transport_class
from ga3_bundles.models.decision import BoundaryComponent, FibrationDescriptor, Verdict
from ga3_bundles.models.links import LinkKind, LinkStep
from ga3_bundles.models.reports import (
    GridReport,
    GridRow,
    IntersectionReport,
    LinearSystemReport,
    LinkReport,
    MutantReport,
)
from ga3_bundles.reporting.renderer import ReportRenderer
from ga3_bundles.services.classification_service import ClassificationService

# Configure logging
logging.basicConfig(
    level=logging.INFO if settings.debug else getattr(logging, settings.log_level.upper(), logging.WARNING),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("ga3-bundles")

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Flags whose value may itself start with '-' (e.g. -c -K, -p -t1)
_VALUE_FLAGS = {"-c": "--class", "--class": "--class", "-p": "--poly", "--poly": "--poly"}


def _rejoin_dash_values(argv: Sequence[str]) -> List[str]:
    """Turn `-c -K` into `--class=-K` so argparse does not read -K as an option."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        value = argv[i + 1] if i + 1 < len(argv) else ""
        if arg in _VALUE_FLAGS and value.startswith("-") and not value.startswith("--") and value != "-h":
            out.append(f"{_VALUE_FLAGS[arg]}={value}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


class _AppendBoundary(argparse.Action):
    """Collect -p and -c into one list of (kind, text), keeping command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        components = list(getattr(namespace, self.dest, None) or [])
        components.append((self.const, values))
        setattr(namespace, self.dest, components)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="text", action="store_false", default=False, help="JSON report (default)")
    output.add_argument("--text", dest="text", action="store_true", help="human-readable report")
    common.add_argument("--max-degree", type=int, default=None, help="Groebner degree cap for this run")

    parser = argparse.ArgumentParser(
        prog="ga3-bundles",
        description="Ga^3-structures on split P^2-bundles F(-d1,-d2,0) over P^1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", parents=[common], help="decide whether a Ga^3-structure exists")
    classify.add_argument("--degree", type=int, help="degree of the del Pezzo fibration (1..9)")
    classify.add_argument("-b", "--bundle", help="F(e1,e2,e3) or B(d1,d2)")
    classify.add_argument(
        "-p", "--poly", dest="boundary", action=_AppendBoundary, const="poly", default=[], help="boundary equation"
    )
    classify.add_argument(
        "-c", "--class", dest="boundary", action=_AppendBoundary, const="class", default=[], help="boundary class"
    )

    synth = sub.add_parser("synthesize", parents=[common], help="build and certify the action by links")
    synth.add_argument("-b", "--bundle", required=True)

    verify = sub.add_parser("verify", parents=[common], help="certify an action candidate")
    verify.add_argument("-b", "--bundle", required=True)
    verify.add_argument("-p", "--poly", action="append", default=[], help="images of t1 t2 x1 x2 x3 (five times)")
    verify.add_argument("--boundary", action="append", default=[], help="boundary component (repeatable)")
    verify.add_argument("--point", nargs=5, metavar=("T1", "T2", "X1", "X2", "X3"), help="base point")
    verify.add_argument("--mutant", choices=sorted(MUTANTS), help="verify a seeded invalid candidate")

    linsys = sub.add_parser("linsys", parents=[common], help="monomial basis of a linear system")
    linsys.add_argument("-b", "--bundle", required=True)
    linsys.add_argument("-c", "--class", dest="classes", action="append", default=[], required=True)

    intersect = sub.add_parser("intersect", parents=[common], help="triple intersection number")
    intersect.add_argument("-b", "--bundle", required=True)
    intersect.add_argument("-c", "--class", dest="classes", action="append", default=[], required=True)

    plan = sub.add_parser("plan", parents=[common], help="elementary links from P^1 x P^2")
    plan.add_argument("-b", "--bundle", required=True)

    link = sub.add_parser("link", parents=[common], help="one elementary link")
    link.add_argument("--kind", choices=[k.value for k in LinkKind], required=True)
    link.add_argument("-b", "--bundle", required=True, help="source bundle")
    link.add_argument("-c", "--class", dest="classes", action="append", default=[], help="class to transport")
    link.add_argument("-p", "--poly", action="append", default=[], help="polynomial whose multiplicity is wanted")
    link.add_argument("--multiplicity", type=int, default=None, help="multiplicity for -c (default: 0)")

    grid = sub.add_parser("grid", parents=[common], help="synthesize every bundle with d1 <= N")
    grid.add_argument("--max-d1", type=int, default=settings.synthesis_grid_max_d1)
    grid.add_argument("--workers", type=int, default=1)

    return parser


# --- Commands ---

def _limits(args) -> Optional[GroebnerLimits]:
    return GroebnerLimits(max_degree=args.max_degree) if args.max_degree is not None else None


def _cmd_classify(args, renderer: ReportRenderer, out: TextIO) -> int:
    if args.degree is not None:
        descriptor = FibrationDescriptor(degree=args.degree)
    else:
        if not args.bundle:
            raise ValueError("classify needs --degree or -b with two boundary components")
        bundle = parse_bundle_descriptor(args.bundle)
        components = [
            BoundaryComponent(polynomial=parse(text)) if kind == "poly"
            else BoundaryComponent(divisor_class=parse_divisor_class(text, bundle))
            for kind, text in args.boundary
        ]
        descriptor = FibrationDescriptor(bundle=bundle, boundary=components)
    decision = ClassificationService(_limits(args)).classify(descriptor)
    out.write(renderer.render("decision", decision, args.text))
    return EXIT_NO if decision.verdict == Verdict.NO else EXIT_OK


def _cmd_synthesize(args, renderer: ReportRenderer, out: TextIO) -> int:
    report = synthesize(parse_bundle_descriptor(args.bundle), _limits(args))
    out.write(renderer.render("synthesis", report, args.text))
    return EXIT_OK if report.valid else EXIT_NO


def _cmd_verify(args, renderer: ReportRenderer, out: TextIO) -> int:
    bundle = parse_bundle_descriptor(args.bundle)
    base_point = parse_base_point(args.point)
    if args.mutant:
        mutant = build_mutant(args.mutant, bundle)
        certificate = verify_all(mutant.action, mutant.boundary, base_point, _limits(args))
        report = MutantReport(mutant=args.mutant, rejected_by=mutant.rejected_by, certificate=certificate)
        out.write(renderer.render("certificate", report, args.text))
        return EXIT_OK if certificate.valid else EXIT_NO
    if args.poly:
        if len(args.poly) != 5:
            raise ValueError(f"verify -p needs five images (t1 t2 x1 x2 x3), got {len(args.poly)}")
        action = ActionCandidate(bundle=bundle, images=tuple(parse(p) for p in args.poly))
    else:
        action = standard_action(bundle)
    boundary = [parse(p) for p in args.boundary] if args.boundary else list(STANDARD_BOUNDARY)
    certificate = verify_all(action, boundary, base_point, _limits(args))
    out.write(renderer.render("certificate", certificate, args.text))
    return EXIT_OK if certificate.valid else EXIT_NO


def _cmd_linsys(args, renderer: ReportRenderer, out: TextIO) -> int:
    bundle = parse_bundle_descriptor(args.bundle)
    if len(args.classes) != 1:
        raise ValueError("linsys takes exactly one -c")
    divisor = parse_divisor_class(args.classes[0], bundle)
    report = LinearSystemReport(
        bundle=bundle,
        divisor=divisor,
        monomials=[str(m) for m in linear_system_basis(bundle, divisor)],
        section_count=section_count(bundle, divisor),
    )
    if args.text:
        out.write(renderer.render_text("linsys", report))
    else:
        out.write(renderer.to_json(report.monomials))
    return EXIT_OK


def _cmd_intersect(args, renderer: ReportRenderer, out: TextIO) -> int:
    bundle = parse_bundle_descriptor(args.bundle)
    if len(args.classes) != 3:
        raise ValueError(f"intersect takes exactly three -c, got {len(args.classes)}")
    classes = tuple(parse_divisor_class(c, bundle) for c in args.classes)
    report = IntersectionReport(bundle=bundle, classes=classes, value=intersection_number(bundle, *classes))
    if args.text:
        out.write(renderer.render_text("intersect", report))
    else:
        out.write(renderer.to_json(report.value))
    return EXIT_OK


def _cmd_plan(args, renderer: ReportRenderer, out: TextIO) -> int:
    plan = plan_links(parse_bundle_descriptor(args.bundle))
    if args.text:
        out.write(renderer.render_text("plan", plan))
    else:
        out.write(renderer.to_json(plan.steps))
    return EXIT_OK


def _cmd_link(args, renderer: ReportRenderer, out: TextIO) -> int:
    source = parse_bundle_descriptor(args.bundle)
    if args.kind == LinkKind.LINE.value:
        if source.d1 != source.d2:
            raise ValueError(f"A line link needs a source of type (d,d), got {source}")
        step = LinkStep.line(source.d1)
    else:
        step = LinkStep.point(source.d1, source.d2)
    limits = _limits(args)
    report = LinkReport(step=step, images=link_map(step, limits).images)
    if args.poly:
        polynomial = parse(args.poly[0])
        report.polynomial = polynomial
        report.multiplicity = multiplicity_along_center(step, polynomial, limits)
    if args.classes:
        divisor = parse_divisor_class(args.classes[0], source)
        multiplicity = args.multiplicity if args.multiplicity is not None else (report.multiplicity or 0)
        report.divisor = divisor
        report.multiplicity = multiplicity
        report.transported = transport_class(step, divisor, multiplicity)
    out.write(renderer.render("link", report, args.text))
    return EXIT_OK


def _grid_row(d1: int, d2: int, max_degree: Optional[int]) -> GridRow:
    """One grid point; module-level so a process pool can pickle it."""
    bundle = BundleType(d1=d1, d2=d2)
    limits = GroebnerLimits(max_degree=max_degree) if max_degree is not None else None
    try:
        report = synthesize(bundle, limits)
    except (SynthesisError, GroebnerResourceError) as exc:
        return GridRow(bundle=bundle, valid=False, plan_length=d1, error=str(exc))
    return GridRow(bundle=bundle, valid=report.valid, plan_length=len(report.plan))


def _cmd_grid(args, renderer: ReportRenderer, out: TextIO) -> int:
    pairs = [(d1, d2) for d1 in range(args.max_d1 + 1) for d2 in range(d1 + 1)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_grid_row, *zip(*pairs), [args.max_degree] * len(pairs)))
    else:
        rows = [_grid_row(d1, d2, args.max_degree) for d1, d2 in pairs]
    report = GridReport(max_d1=args.max_d1, rows=rows)
    out.write(renderer.render("grid", report, args.text))
    return EXIT_OK if report.all_valid else EXIT_NO


COMMANDS = {
    "classify": _cmd_classify,
    "synthesize": _cmd_synthesize,
    "verify": _cmd_verify,
    "linsys": _cmd_linsys,
    "intersect": _cmd_intersect,
    "plan": _cmd_plan,
    "link": _cmd_link,
    "grid": _cmd_grid,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse argv, run one command, write its report; returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_rejoin_dash_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    renderer = ReportRenderer()
    try:
        return COMMANDS[args.command](args, renderer, out)
    except GroebnerResourceError as e:
        logger.warning(f"Resource limit: {e}")
        print(f"error: resource limit reached: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SynthesisError, LinkPreconditionError, LinkContractError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected failure in {args.command}: {e}")
        raise


# --- Entry point ---

def main():
    """Run the CLI and exit with its status."""
    sys.exit(run())


if __name__ == "__main__":
    main()
