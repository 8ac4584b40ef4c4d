"""
Fighting Fish Bijections - Main CLI
Count, map, verify, census and render fighting fish and ternary trees
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Add the parent directory to the path to enable imports
sys.path.insert(0, str(Path(__file__).parent))

from bijection.left import phi_left, phi_left_inv
from bijection.marked import load_fish, mark_by_index, phi, phi_inv
from bijection.symmetric import pair_to_symmetric, symmetric_to_pair
from bijection.tails import TreePair, pair_to_tailed_fish, tails_to_pair
from config import load_family_config, load_settings
from enumeration.census import census
from enumeration.conjecture import conjecture_diff
from enumeration.counting import (
    count_fish,
    count_left,
    count_pairs,
    count_symmetric_size,
    count_ternary,
)
from enumeration.generators import GROWTH_ORACLE, METHODS, VIA_LEFT_TREES
from enumeration.qpoly import evaluate, format_coefficients, g_polynomial
from fishcore.fish import fish_to_json
from render.svg import render_fish, render_tree
from suites import SUITES
from ternary.tree import parse_tree, tree_code
from utils.cache_manager import CacheManager
from utils.errors import FishBijError, OracleLimit, ParseError
from utils.logging_setup import configure_logging, progress_enabled

logger = logging.getLogger('fishbij')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


COUNTS: Dict[str, Callable[[int], int]] = {
    'fish': count_fish,
    'ternary': count_ternary,
    'left': count_left,
    'pairs': count_pairs,
    'symmetric': lambda size: count_symmetric_size(size, 'all'),
    'symmetric-odd': lambda size: count_symmetric_size(size, 'odd'),
    'symmetric-even': lambda size: count_symmetric_size(size, 'even'),
}

MAP_DIRECTIONS = (
    'tree-to-fish', 'fish-to-tree', 'tree-to-marked', 'marked-to-tree',
    'tails-to-pair', 'pair-to-fish', 'symmetric-to-pair', 'pair-to-symmetric',
)


class UsageError(FishBijError):
    """Arguments that parse but are out of range"""

    exit_code = EXIT_USAGE


def read_input(value: str) -> str:
    """Inputs starting with '@' name a file to read, '@-' reads stdin"""
    if not value.startswith('@'):
        return value
    if value == '@-':
        return sys.stdin.read()
    path = Path(value[1:])
    try:
        return path.read_text(encoding='utf-8')
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(',', ':'))


def write_output(text, out: Optional[str]):
    """Write to --out when given, otherwise to stdout"""
    if out is None:
        if isinstance(text, bytes):
            sys.stdout.flush()
            sys.stdout.buffer.write(text)
        else:
            sys.stdout.write(text)
        sys.stdout.flush()
        return
    data = text.encode('utf-8') if isinstance(text, str) else text
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    Path(out).write_bytes(data)
    logger.info(f"Wrote {len(data)} bytes to {out}")


def check_bound(n: int, limit: int, what: str):
    if n > limit:
        raise UsageError(f"{what} is limited to n <= {limit}, got {n}")


def check_oracle(args, n: int, settings):
    """FISHBIJ_MAX_ORACLE caps every oracle-backed enumeration"""
    if args.method == GROWTH_ORACLE and n > settings['max_oracle']:
        raise OracleLimit(f"growth oracle is capped at n={settings['max_oracle']}, got {n}")


def get_cache(args, settings) -> Optional[CacheManager]:
    if args.no_cache or not settings.get('cache_enabled', True):
        return None
    return CacheManager(settings['cache_dir'])


def cmd_count(args, settings) -> int:
    minimum = load_family_config()['counts'][args.family]['min_size']
    if args.n < minimum:
        raise UsageError(f"count {args.family} needs n >= {minimum}, got {args.n}")
    check_bound(args.n, settings['limits']['count_max'], "count")
    print(COUNTS[args.family](args.n))
    return EXIT_OK


def _pair(args) -> TreePair:
    if args.extra is None:
        raise UsageError(f"map {args.direction} needs two tree codes")
    return TreePair(parse_tree(read_input(args.input)), parse_tree(read_input(args.extra)))


def _int_extra(args, what: str) -> int:
    if args.extra is None:
        raise UsageError(f"map {args.direction} needs a {what}")
    try:
        return int(read_input(args.extra))
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {args.extra!r}")


def cmd_map(args, settings) -> int:
    direction = args.direction
    if direction == 'tree-to-fish':
        result = dump_json(fish_to_json(phi_left(parse_tree(read_input(args.input)))))
    elif direction == 'fish-to-tree':
        result = tree_code(phi_left_inv(load_fish(read_input(args.input))))
    elif direction == 'tree-to-marked':
        marked = phi(parse_tree(read_input(args.input)))
        result = dump_json({'fish': fish_to_json(marked.fish), 'strip': marked.strip_index})
    elif direction == 'marked-to-tree':
        f = load_fish(read_input(args.input))
        result = tree_code(phi_inv(mark_by_index(f, _int_extra(args, "strip index"))))
    elif direction == 'tails-to-pair':
        f = load_fish(read_input(args.input))
        result = ' '.join(tails_to_pair(f, _int_extra(args, "tail cell id")).codes())
    elif direction == 'pair-to-fish':
        f, tail = pair_to_tailed_fish(_pair(args))
        result = dump_json({'fish': fish_to_json(f), 'tail': tail})
    elif direction == 'symmetric-to-pair':
        result = ' '.join(symmetric_to_pair(load_fish(read_input(args.input))).codes())
    else:
        result = dump_json(fish_to_json(pair_to_symmetric(_pair(args))))
    write_output(result + '\n', args.out)
    return EXIT_OK


def _nmax(args, default: int) -> int:
    if args.nmax_flag is not None:
        return args.nmax_flag
    return args.nmax if args.nmax is not None else default


def cmd_verify(args, settings) -> int:
    nmax = _nmax(args, settings['defaults']['verify_nmax'])
    check_bound(nmax, settings['limits']['enumerate_max'], "verify")
    check_oracle(args, nmax, settings)
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    cache = get_cache(args, settings)
    failed = 0
    lines: List[str] = []
    for name in names:
        suite = SUITES[name](
            method=args.method,
            workers=args.parallel,
            cache=cache,
            show_progress=progress_enabled(settings['progress'], args.quiet),
            max_oracle=settings['max_oracle'],
        )
        logger.info(f"Running suite {name} up to n={nmax}")
        for result in suite.run(nmax):
            lines.append(result.line())
            failed += not result.passed
    lines.append(f"{len(lines) - failed} passed, {failed} failed")
    write_output('\n'.join(lines) + '\n', args.out)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_render(args, settings) -> int:
    text = read_input(args.object).strip()
    style = settings['render']
    if text.startswith('{'):
        svg = render_fish(load_fish(text), style)
    else:
        svg = render_tree(parse_tree(text), style, labels=not args.no_labels)
    write_output(svg, args.out)
    return EXIT_OK


def cmd_conjecture(args, settings) -> int:
    nmax = _nmax(args, settings['defaults']['conjecture_nmax'])
    check_bound(nmax, settings['limits']['enumerate_max'], "conjecture")
    cache = get_cache(args, settings)
    lines = []
    for n in range(1, nmax + 1):
        report = conjecture_diff(n, settings['conjecture']['fin_offset'], args.parallel, cache)
        lines.extend(report.lines())
    write_output('\n'.join(lines) + '\n', args.out)
    return EXIT_OK


def cmd_census(args, settings) -> int:
    check_bound(args.n, settings['limits']['enumerate_max'], "census")
    check_oracle(args, args.n, settings)
    statistics = args.stat or list(load_family_config()['families'].get(args.family, {}).get('statistics', []))
    result = census(args.family, args.n, statistics, args.method, args.parallel,
                    get_cache(args, settings))
    write_output(result.export(args.format), args.out)
    return EXIT_OK


def cmd_qpoly(args, settings) -> int:
    if args.n < 1:
        raise UsageError(f"qpoly needs n >= 1, got {args.n}")
    check_bound(args.n, settings['limits']['qpoly_max'], "qpoly")
    g = g_polynomial(args.n)
    lines = [format_coefficients(g)]
    if args.evaluate:
        lines.append(f"G_{args.n}(1) = {evaluate(g, 1)}")
        lines.append(f"G_{args.n}(-1) = {evaluate(g, -1)}")
    write_output('\n'.join(lines) + '\n', args.out)
    return EXIT_OK


COMMANDS = {
    'count': cmd_count,
    'map': cmd_map,
    'verify': cmd_verify,
    'render': cmd_render,
    'conjecture': cmd_conjecture,
    'census': cmd_census,
    'qpoly': cmd_qpoly,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Fighting fish and ternary trees - counts, bijections and exhaustive checks'
    )
    parser.add_argument('--log-level', help='Logging level (default from settings.yaml)')
    parser.add_argument('--quiet', action='store_true', help='Only log warnings and errors, no progress bars')
    parser.add_argument('--no-cache', action='store_true', help='Do not read or write the enumeration cache')
    parser.add_argument('--out', help='Write the result to this file instead of stdout')
    parser.add_argument('--parallel', type=int, default=None, help='Worker processes for census-based work')
    parser.add_argument('--method', choices=METHODS, default=VIA_LEFT_TREES,
                        help='How fish are enumerated')

    sub = parser.add_subparsers(dest='command', required=True)

    count = sub.add_parser('count', help='Closed-form counts')
    count.add_argument('family', choices=list(COUNTS))
    count.add_argument('n', type=int, help='Size (fish size for the symmetric families)')

    mapping = sub.add_parser('map', help='Apply one of the bijections')
    mapping.add_argument('direction', choices=MAP_DIRECTIONS)
    mapping.add_argument('input', help="Tree code or fish JSON; '@file' reads a file")
    mapping.add_argument('extra', nargs='?',
                         help='Strip index, tail cell id or second tree code')

    verify = sub.add_parser('verify', help='Run verification suites')
    verify.add_argument('suite', choices=[*SUITES, 'all'])
    verify.add_argument('nmax', type=int, nargs='?', help='Largest size to check')
    verify.add_argument('--nmax', dest='nmax_flag', type=int, help='Same as the positional nmax')

    render = sub.add_parser('render', help='Render a fish or a tree as SVG')
    render.add_argument('object', help="Fish JSON or tree code; '@file' reads a file")
    render.add_argument('--no-labels', action='store_true', help='Omit direction labels on tree nodes')

    conjecture = sub.add_parser('conjecture', help='Compare fin/tail statistics with left-tree statistics')
    conjecture.add_argument('nmax', type=int, nargs='?', help='Largest size to compare')
    conjecture.add_argument('--nmax', dest='nmax_flag', type=int, help='Same as the positional nmax')

    cen = sub.add_parser('census', help='Joint statistic distribution over a family')
    cen.add_argument('family')
    cen.add_argument('n', type=int)
    cen.add_argument('--stat', action='append', help='Statistic to tabulate (repeatable)')
    cen.add_argument('--format', choices=['text', 'csv', 'json'], default='text')

    qpoly = sub.add_parser('qpoly', help='Coefficients of the q-analogue G_n(q)')
    qpoly.add_argument('n', type=int)
    qpoly.add_argument('--evaluate', action='store_true', help='Also print G_n(1) and G_n(-1)')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = load_settings()
    configure_logging(args.log_level or settings['log_level'], args.quiet)
    if args.parallel is None:
        args.parallel = settings['defaults']['parallel']
    if args.parallel < 1:
        logger.error(f"--parallel must be >= 1, got {args.parallel}")
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, settings)
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        return e.exit_code
    except FishBijError as e:
        logger.error(str(e))
        return e.exit_code
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
