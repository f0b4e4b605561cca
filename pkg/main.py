"""
Greedy-drawability toolkit

Decides whether a tree or a pseudo-tree (a connected graph with one cycle) has
a Euclidean greedy drawing, draws the ones that do, checks drawings supplied
from elsewhere and re-verifies the degree-5 reference cases.

Commands:
- classify      type and opening-angle supremum of every rooted subtree
- recognize     drawability decision as JSON (exit 1 when not drawable)
- draw          verified drawing as coordinates JSON + SVG
- verify        greedy checks on an existing drawing
- verify-cases  certification reports for the degree-5 tables
- enumerate     angle-type tables of drawable bucket combinations

Input graphs are edge lists: one "u v" pair per line, '#' starts a comment.

Exit codes:
- 0 success / drawable / verified
- 1 not drawable, verification failed or a case could not be certified
- 2 errors (parse, construction, I/O)
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import networkx as nx
import pandas as pd

from greedy_graph import Graph, GraphError, build_graph, directed_types, parse_graph
from greedy_layout import (
    Drawing,
    LayoutError,
    NotDrawable,
    SvgOptions,
    draw_pseudo_tree,
    draw_tree,
    drawing_from_json,
    emit_svg,
    read_coordinates,
)
from greedy_verify import VerificationError, check_greedy_halfplane, check_greedy_pairwise, is_exact_coordinate
from opening_angles import ClassificationError, ExactAngle, UnlistedAngleError, angle_bucket, opening_angle_sup
from prefect_flows import format_summary, groups_for, run_group, summary_metrics, write_angle_table, write_group
from recognition import (
    RecognitionError,
    cycle_angles,
    enumerate_feasible_combinations,
    recognize_pseudo_tree,
    recognize_tree,
    row_labels,
)
from settings import CONFIG

logger = logging.getLogger(__name__)

COMMANDS = ("classify", "recognize", "draw", "verify", "verify-cases", "enumerate")
CASES = ("infeasible", "feasible", "regression", "all")

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2


class RunConfigError(ValueError):
    """A command is missing a required option or got an invalid one."""


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI run needs."""
    command: str
    input: Path | None = None
    output: Path | None = None
    tolerance: float = CONFIG["greedy_tolerance"]
    case: str = "all"
    seed: int | None = None
    random: int | None = None
    degree: int | None = None
    coords: Path | None = None
    svg: Path | None = None
    json: Path | None = None
    parquet: bool = False
    cones: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise RunConfigError(f"unknown command '{self.command}'")
        if not self.tolerance > 0:
            raise RunConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.command in ("classify", "recognize", "verify") and self.input is None:
            raise RunConfigError(f"{self.command} needs --input")
        if self.command == "draw" and (self.input is None) == (self.random is None):
            raise RunConfigError("draw needs exactly one of --input and --random")
        if self.random is not None and self.random < 2:
            raise RunConfigError(f"--random needs at least two vertices, got {self.random}")
        if self.case not in CASES:
            raise RunConfigError(f"unknown case '{self.case}'")
        if self.degree is not None and not 1 <= self.degree <= 5:
            raise RunConfigError(f"--degree must be between 1 and 5, got {self.degree}")

    @property
    def output_dir(self) -> Path:
        return self.output or Path(CONFIG["output_dir"])


def setup_logging(log_level=logging.INFO, log_file=None):
    """
    Configure logging with console and optional file output

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path to write logs to
    """
    formatter = logging.Formatter(
        fmt='%(asctime)s UTC %(levelname)-8s %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    formatter.converter = time.gmtime

    root = logging.getLogger()
    root.setLevel(log_level)
    root.handlers.clear()

    # logs go to stderr so JSON on stdout stays parseable
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, mode='w')
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
        logging.info(f"📝 Logging to file: {log_file}")


# ============================================================================
# INPUT / OUTPUT
# ============================================================================

def load_graph(path: Path) -> Graph:
    graph = parse_graph(path.read_text())
    logger.info(f"🔍 Read {graph.kind.value} with {len(graph)} vertices from {path}")
    return graph


def random_tree(n: int, seed: int | None) -> Graph:
    """Uniform random labeled tree on n vertices named t0..t{n-1}."""
    g = nx.random_labeled_tree(n, seed=seed)
    return build_graph([(f"t{u}", f"t{v}") for u, v in sorted(g.edges)])


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"📝 Wrote {path}")
    return path


def emit_json(payload: dict, path: Path | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    print(text)
    if path is not None:
        write_text(path, text + "\n")


def recognize(graph: Graph):
    if graph.is_tree:
        return recognize_tree(graph)
    return recognize_pseudo_tree(graph)


# ============================================================================
# COMMANDS
# ============================================================================

def _bucket_label(angle: ExactAngle) -> str | None:
    try:
        return angle_bucket(angle).label
    except UnlistedAngleError:
        return None


def classify_frame(graph: Graph) -> pd.DataFrame:
    """One row per rooted subtree: every arc of a tree, every hanging tree of a pseudo-tree."""
    rows = []
    if graph.is_tree:
        for (stub, child), tt in sorted(directed_types(graph).items(), key=lambda kv: (graph.index(kv[0][0]), graph.index(kv[0][1]))):
            angle = opening_angle_sup(tt)
            rows.append({"stub": stub, "child": child, "type": str(tt), "sup": str(angle), "bucket": _bucket_label(angle)})
    else:
        cycle, phis, types = cycle_angles(graph)
        for v in cycle:
            rows.append({"stub": None, "child": v, "type": str(types[v]), "sup": str(phis[v]), "bucket": _bucket_label(phis[v])})
    return pd.DataFrame(rows, columns=["stub", "child", "type", "sup", "bucket"])


def run_classify(cfg: RunConfig) -> int:
    frame = classify_frame(load_graph(cfg.input))
    print(frame.to_string(index=False))
    if cfg.json is not None:
        write_text(cfg.json, json.dumps(frame.to_dict(orient="records"), indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def run_recognize(cfg: RunConfig) -> int:
    decision = recognize(load_graph(cfg.input))
    emit_json(decision.to_dict(), cfg.json)
    if decision.drawable:
        logger.info(f"✅ Drawable ({decision.rule.value})")
        return EXIT_OK
    logger.info(f"❌ Not drawable ({decision.rule.value})")
    return EXIT_REJECTED


def run_draw(cfg: RunConfig) -> int:
    if cfg.input is not None:
        graph, stem = load_graph(cfg.input), cfg.input.stem
    else:
        graph = random_tree(cfg.random, cfg.seed)
        stem = f"random_{cfg.random}_{cfg.seed}"
        logger.info(f"🔍 Random tree on {cfg.random} vertices (seed {cfg.seed})")

    result = draw_tree(graph) if graph.is_tree else draw_pseudo_tree(graph)
    if isinstance(result, NotDrawable):
        emit_json(result.decision.to_dict(), None)
        return EXIT_REJECTED

    json_path = cfg.json or cfg.output_dir / f"{stem}.json"
    svg_path = cfg.svg or cfg.output_dir / f"{stem}.svg"
    write_text(json_path, result.to_json(exact=True) + "\n")
    write_text(svg_path, emit_svg(result, SvgOptions(cones=cfg.cones)))
    logger.info(f"✅ {result.report.summary()}")
    return EXIT_OK


def load_drawing(cfg: RunConfig) -> Drawing:
    if cfg.coords is None:
        return drawing_from_json(cfg.input.read_text())
    return read_coordinates(load_graph(cfg.input), json.loads(cfg.coords.read_text()))


def verify_drawing(drawing: Drawing, tolerance: float) -> dict:
    """Greedy checks on a drawing with a margin of tolerance times the diameter.

    Rational coordinates are checked exactly against that margin as an absolute
    Fraction; float coordinates are checked in floats.
    """
    exact = all(is_exact_coordinate(c) for xy in drawing.coords.values() for c in xy)
    tol = Fraction(tolerance) * Fraction(drawing.diameter()) if exact else tolerance
    reports = [check_greedy_pairwise(drawing, tol, exact=exact)]
    if drawing.graph.is_tree:
        reports.append(check_greedy_halfplane(drawing, tol, exact=exact))
    for report in reports:
        level = logging.INFO if report.passed else logging.WARNING
        logger.log(level, f"{'✅' if report.passed else '⚠️'} {report.summary()}")
    return {
        "passed": all(r.passed for r in reports),
        "exact": exact,
        "tolerance": tolerance,
        "diameter": drawing.diameter(),
        "reports": [r.to_dict() for r in reports],
    }


def run_verify(cfg: RunConfig) -> int:
    outcome = verify_drawing(load_drawing(cfg), cfg.tolerance)
    emit_json(outcome, cfg.json)
    return EXIT_OK if outcome["passed"] else EXIT_REJECTED


def run_verify_cases(cfg: RunConfig) -> int:
    results = []
    for group in groups_for(cfg.case):
        logger.info(f"🔍 Verifying {group} cases")
        result = run_group(group)
        write_group(result, cfg.output_dir, cfg.parquet)
        results.append(result)
    metrics = summary_metrics(results)
    logger.info(format_summary(metrics))
    for failure in metrics["failures"]:
        logger.error(f"🚨 {failure}")
    return EXIT_REJECTED if metrics["has_problems"] else EXIT_OK


def run_enumerate(cfg: RunConfig) -> int:
    for d in [cfg.degree] if cfg.degree else range(1, 6):
        rows = enumerate_feasible_combinations(d)
        print(f"d = {d}")
        for row in rows:
            print("  (" + ", ".join(row_labels(row)) + ")")
        write_angle_table(d, rows, cfg.output_dir, cfg.parquet)
    return EXIT_OK


HANDLERS = {
    "classify": run_classify,
    "recognize": run_recognize,
    "draw": run_draw,
    "verify": run_verify,
    "verify-cases": run_verify_cases,
    "enumerate": run_enumerate,
}


def run_command(cfg: RunConfig) -> int:
    """Run one command and map its outcome to an exit code."""
    try:
        return HANDLERS[cfg.command](cfg)
    except GraphError as e:
        logger.error(f"🚨 Graph error: {e}")
    except (ClassificationError, RecognitionError) as e:
        logger.error(f"🚨 Classification error: {e}")
    except LayoutError as e:
        logger.error(f"🚨 Layout error: {e}")
    except VerificationError as e:
        logger.error(f"🚨 Verification error: {e}")
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"🚨 I/O error: {e}")
    return EXIT_ERROR


# ============================================================================
# ARGUMENTS
# ============================================================================

def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        description='Greedy-drawability of trees and pseudo-trees',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Opening-angle types of every rooted subtree
  uv run main.py classify --input tree.txt

  # Drawability decision (exit 1 when not drawable)
  uv run main.py recognize --input tree.txt --json decision.json

  # Verified drawing with cone overlays
  uv run main.py draw --input cycle.txt --svg cycle.svg --cones

  # Drawing of a random tree
  uv run main.py draw --random 20 --seed 7

  # Check a drawing written by draw, or an edge list plus coordinates
  uv run main.py verify --input output/tree.json
  uv run main.py verify --input tree.txt --coords coords.json --tolerance 1e-6

  # Re-verify the degree-5 reference cases
  uv run main.py verify-cases --case infeasible --parquet

  # Angle-type table of degree-4 vertices
  uv run main.py enumerate --degree 4

Logging Levels:
  Default     = INFO level (normal operation logs)
  --verbose   = DEBUG level (retries, rejected candidates)
  --quiet     = WARNING level (only warnings and errors)
  --log-file  = Also write logs to specified file
        """
    )

    parser.add_argument('command', choices=COMMANDS, help='What to run')
    parser.add_argument('--input', type=Path, default=None, help='Edge list (or drawing JSON for verify)')
    parser.add_argument('--output', type=Path, default=None,
                        help=f"Output directory. Default: {CONFIG['output_dir']}")
    parser.add_argument('--tolerance', type=float, default=CONFIG['greedy_tolerance'],
                        help='Verification margin relative to the diameter (exact and float coordinates). Default: %(default)s')
    parser.add_argument('--case', choices=CASES, default='all', help='Case group for verify-cases. Default: all')
    parser.add_argument('--seed', type=int, default=None, help='Seed for --random')
    parser.add_argument('--random', type=int, default=None, metavar='N', help='Draw a random tree on N vertices')
    parser.add_argument('--degree', type=int, default=None, help='Single degree for enumerate (1-5)')
    parser.add_argument('--coords', type=Path, default=None, help='Coordinate JSON for verify with an edge-list input')
    parser.add_argument('--svg', type=Path, default=None, help='SVG path for draw')
    parser.add_argument('--json', type=Path, default=None, help='JSON output path')
    parser.add_argument('--parquet', action='store_true', help='Also write Parquet tables')
    parser.add_argument('--cones', action='store_true', help='Draw opening-cone overlays in the SVG')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose (DEBUG level) logging')
    parser.add_argument('--quiet', '-q', action='store_true', help='Quiet mode (WARNING level and above only)')
    parser.add_argument('--log-file', type=str, default=None, help='Also write logs to specified file')

    return parser.parse_args(argv)


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=args.input,
        output=args.output,
        tolerance=args.tolerance,
        case=args.case,
        seed=args.seed,
        random=args.random,
        degree=args.degree,
        coords=args.coords,
        svg=args.svg,
        json=args.json,
        parquet=args.parquet,
        cones=args.cones,
    )


def main(argv=None) -> int:
    """Main execution function"""
    args = parse_arguments(argv)

    if args.verbose:
        log_level = logging.DEBUG
    elif args.quiet:
        log_level = logging.WARNING
    else:
        log_level = logging.INFO

    setup_logging(log_level=log_level, log_file=args.log_file)

    try:
        cfg = config_from_args(args)
    except RunConfigError as e:
        logger.error(f"❌ {e}")
        return EXIT_ERROR
    return run_command(cfg)


if __name__ == "__main__":
    sys.exit(main())
