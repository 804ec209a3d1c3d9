# /project/main.py

import argparse
import logging
import sys
import time
from logging.handlers import TimedRotatingFileHandler

from config import ConfigurationManager
from cubing.automorphism import enumerate_automorphisms
from cubing.classify import Elliptic, Hyperbolic, InversionFound, classify, classify_all
from cubing.complex import validate
from cubing.errors import CubingError, ParseError
from cubing.hyperplanes import halfspaces, walls
from cubing.metric import crossing_sequence, distance, is_geodesic, verify_wall_distance
from cubing.process import Processor
from cubing.subdivision import subdivide
from cubing.wallspace import cubulate
from demos.bass_serre import demo_bs
from demos.l2 import demo_l2
from demos.subadditivity import demo_words
from parse.parse_ccx import (
    emit_complex,
    emit_map,
    load_automorphism,
    load_complex,
    load_wallspace,
    read_file,
    write_file,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_ERROR = 2
EXIT_INDETERMINATE = 3

logger = logging.getLogger(__name__)


def setup_logging(log_file=None, level='INFO'):
    logger = logging.getLogger('')
    logger.setLevel(logging.DEBUG)

    if log_file:
        # Log rotation setup: rotates every midnight, keeps the last day of logs
        handler = TimedRotatingFileHandler(log_file, utc=True, when="midnight", interval=1, backupCount=1)
        handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
        logger.addHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, level.upper(), logging.INFO))
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
    logger.addHandler(console_handler)


def plural(count, word, words=None):
    return f"{count} {word if count == 1 else words or word + 's'}"


def describe_counts(X):
    counts = X.counts() + [0] * 4
    parts = [plural(counts[0], "vertex", "vertices"), plural(counts[1], "edge"),
             plural(counts[2], "square"), plural(counts[3], "cube")]
    parts += [f"{counts[k]} {k}-cubes" for k in range(4, X.dimension + 1)]
    return ", ".join(parts)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=argparse.SUPPRESS, help="YAML settings file")
    common.add_argument('--quiet', action='store_true', default=argparse.SUPPRESS, help="print verdicts only")
    common.add_argument('--format', choices=['plain', 'tsv'], default=argparse.SUPPRESS, help="tabular output style")
    common.add_argument('--jobs', type=int, default=argparse.SUPPRESS, help="worker threads")

    parser = argparse.ArgumentParser(prog='ccx', parents=[common],
                                     description="CAT(0) cube complex toolkit")
    verbs = parser.add_subparsers(dest='verb', required=True)

    check = verbs.add_parser('check', parents=[common], help="validate a complex")
    check.add_argument('file')
    check.add_argument('--cross-check', action='store_true', help="also verify distance = separating walls")

    emit = verbs.add_parser('emit', parents=[common], help="write the canonical form")
    emit.add_argument('file')
    emit.add_argument('-o', '--output')

    hyper = verbs.add_parser('hyperplanes', parents=[common], help="list walls")
    hyper.add_argument('file')

    dist = verbs.add_parser('dist', parents=[common], help="combinatorial distance")
    dist.add_argument('file')
    dist.add_argument('u')
    dist.add_argument('v')

    geo = verbs.add_parser('geodesic', parents=[common], help="test a path for geodesicity")
    geo.add_argument('file')
    geo.add_argument('vertices', nargs='+')

    sub = verbs.add_parser('subdivide', parents=[common], help="cubical barycentric subdivision")
    sub.add_argument('file')
    sub.add_argument('-o', '--output', required=True)

    cls = verbs.add_parser('classify', parents=[common], help="classify an automorphism")
    cls.add_argument('file')
    target = cls.add_mutually_exclusive_group(required=True)
    target.add_argument('--map')
    target.add_argument('--group', action='store_true', help="classify every automorphism of a small complex")
    cls.add_argument('--max-power', type=int)
    cls.add_argument('--radius', type=int)
    cls.add_argument('--window', type=int)

    cub = verbs.add_parser('cubulate', parents=[common], help="cube complex of a wallspace")
    cub.add_argument('file')
    cub.add_argument('-o', '--output', required=True)
    cub.add_argument('--embedding')

    demo = verbs.add_parser('demo', parents=[common], help="worked examples")
    demos = demo.add_subparsers(dest='demo', required=True)
    l2 = demos.add_parser('l2', parents=[common])
    l2.add_argument('--window', type=int, default=6)
    l2.add_argument('--axis', type=int, default=5)
    l2.add_argument('--radius', type=int)
    bs = demos.add_parser('bs', parents=[common])
    bs.add_argument('--m', type=int, default=1)
    bs.add_argument('--n', type=int, default=2)
    bs.add_argument('--radius', type=int, default=4)
    words = demos.add_parser('words', parents=[common])
    words.add_argument('--radius', type=int)

    conf = verbs.add_parser('config', parents=[common], help="manage the settings file")
    actions = conf.add_subparsers(dest='action', required=True)
    actions.add_parser('init', parents=[common])
    return parser


class Runner:
    def __init__(self, args, config, out):
        self.args = args
        self.config = config
        self.out = out
        self.quiet = getattr(args, 'quiet', False)
        self.tsv = getattr(args, 'format', 'plain') == 'tsv'
        self.processor = Processor(getattr(args, 'jobs', None) or config.max_workers)
        self.logger = logging.getLogger(__name__)

    def say(self, line=""):
        print(line, file=self.out)

    def detail(self, line):
        if not self.quiet:
            self.say(line)

    def load(self, path):
        return load_complex(read_file(path), source=path)

    def report_invalid(self, X):
        """Print the validation failures of X; True when X is not a cubing."""
        report = validate(X)
        if report.accepted:
            return False
        self.say(f"invalid: {report.failures[0]}")
        for failure in report.failures[1:]:
            self.detail(f"  {failure}")
        return True

    def check(self):
        X = self.load(self.args.file)
        if self.report_invalid(X):
            return EXIT_FINDING
        if self.tsv:
            counts = X.counts() + [0] * 4
            self.say("vertices\tedges\tsquares\tcubes")
            self.say("\t".join(str(c) for c in counts[:4]))
        else:
            self.say(f"valid cubing: {describe_counts(X)}")
        if self.args.cross_check:
            pairs = verify_wall_distance(X, self.processor)
            self.detail(f"distance equals separating walls on {pairs} pairs")
        return EXIT_OK

    def emit(self):
        text = emit_complex(self.load(self.args.file))
        if self.args.output:
            write_file(self.args.output, text)
        else:
            self.out.write(text)
        return EXIT_OK

    def hyperplanes(self):
        X = self.load(self.args.file)
        if self.report_invalid(X):
            return EXIT_FINDING
        if self.tsv:
            self.say("id\tedges\tside0\tside1")
        for wall in walls(X):
            pair = halfspaces(X, wall)
            if self.tsv:
                self.say(f"{wall.id}\t{len(wall.edges)}\t{len(pair.side0)}\t{len(pair.side1)}")
            else:
                self.say(f"wall {wall.id}: {len(wall.edges)} edges, sides {len(pair.side0)}/{len(pair.side1)}")
        return EXIT_OK

    def dist(self):
        X = self.load(self.args.file)
        self.say(str(distance(X, self.args.u, self.args.v)))
        return EXIT_OK

    def geodesic(self):
        X = self.load(self.args.file)
        if is_geodesic(X, self.args.vertices):
            self.say("geodesic")
            return EXIT_OK
        _, _, wall = crossing_sequence(X, self.args.vertices).first_repeat()
        self.say(f"not-geodesic {wall}")
        return EXIT_FINDING

    def subdivide(self):
        S = subdivide(self.load(self.args.file))
        write_file(self.args.output, emit_complex(S.subdivided))
        self.detail(f"subdivision: {describe_counts(S.subdivided)}")
        return EXIT_OK

    def classify_params(self):
        return dict(
            max_power=self.args.max_power,
            radius=self.args.radius or self.config.search_radius,
            window=self.args.window or self.config.axis_window,
            budget=self.config.vertex_budget,
        )

    def classify(self):
        X = self.load(self.args.file)
        if self.report_invalid(X):
            return EXIT_FINDING
        if self.args.group:
            return self.classify_group(X)
        f = load_automorphism(X, read_file(self.args.map), source=self.args.map)
        result = classify(f, **self.classify_params())
        self.say(result.summary())
        verdict = result.verdict
        if isinstance(verdict, Hyperbolic):
            self.detail("axis: " + " ".join(verdict.axis.vertices))
        for line in result.certificate:
            self.detail(f"  {line}")
        if isinstance(verdict, (Elliptic, Hyperbolic)):
            return EXIT_OK
        if isinstance(verdict, InversionFound):
            return EXIT_FINDING
        return EXIT_INDETERMINATE

    def classify_group(self, X):
        group = enumerate_automorphisms(X, limit=self.config.brute_force_limit)
        results = classify_all(group, self.processor, **self.classify_params())
        for g, result in zip(group, results):
            self.say(f"{g.name}: {result.summary()}")
        kinds = {result.kind for result in results}
        self.detail(f"{len(results)} automorphisms: " + ", ".join(
            f"{sum(1 for r in results if r.kind == kind)} {kind}" for kind in sorted(kinds)))
        if "inversion" in kinds:
            return EXIT_FINDING
        if "indeterminate" in kinds:
            return EXIT_INDETERMINATE
        return EXIT_OK

    def cubulate(self):
        W = load_wallspace(read_file(self.args.file), source=self.args.file)
        result = cubulate(W, max_walls=self.config.max_walls)
        write_file(self.args.output, emit_complex(result.complex))
        if self.args.embedding:
            write_file(self.args.embedding, emit_map(result.embedding, kind="map"))
        self.detail(f"cubulation: {describe_counts(result.complex)}")
        return EXIT_OK

    def demo(self):
        limits = dict(max_power=self.config.implicit_max_power, budget=self.config.vertex_budget)
        if self.args.demo == 'l2':
            report = demo_l2(self.args.window, self.args.axis, radius=self.args.radius or self.config.search_radius,
                             **limits)
        elif self.args.demo == 'bs':
            report = demo_bs(self.args.m, self.args.n, self.args.radius, **limits)
        else:
            report = demo_words(radius=self.args.radius or self.config.search_radius, budget=self.config.vertex_budget)
        self.say(report.render(quiet=self.quiet))
        return EXIT_OK if report.passed else EXIT_FINDING

    def config_init(self, manager):
        path = manager.create_default_config_file()
        self.say(f"wrote {path}")
        return EXIT_OK


def run(argv=None, out=None, configure_logging=False):
    """
    Run one ccx command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when omitted.
        out: Stream for reports; stdout when omitted.
        configure_logging: Install console and file log handlers.

    Returns:
        The process exit code.
    """
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    try:
        manager = ConfigurationManager(getattr(args, 'config', None))
    except CubingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    config = manager.app_config
    if configure_logging:
        level = 'WARNING' if getattr(args, 'quiet', False) else config.log_level
        setup_logging(config.log_file, level)

    runner = Runner(args, config, out)
    start_time = time.time()
    try:
        if args.verb == 'config':
            code = runner.config_init(manager)
        else:
            code = getattr(runner, args.verb)()
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except CubingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logger.info(f"ccx {args.verb} finished in {time.time() - start_time:.2f} seconds with exit code {code}")
    return code


def main():
    sys.exit(run(sys.argv[1:], configure_logging=True))


if __name__ == "__main__":
    main()
