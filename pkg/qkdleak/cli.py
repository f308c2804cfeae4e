# -*- coding: utf-8 -*-
"""Command line front end: ``qkdleak {sweep,fig1,fig2,fig3,zero-distance}``"""

import argparse
import logging
import os
import sys

from qkdleak import core, errors
from qkdleak.__version__ import __version__
from qkdleak.config import METHODS, ScenarioConfig
from qkdleak.sweep import (FIG3_COLUMNS, FIG3_POINTS, RATE_COLUMNS,
                           emit_csv, fig3_table, preset, read_csv, run_sweep,
                           scenario_path, zero_key_distance)

__author__ = 'qkdleak developers'
__all__ = ['main', 'build_parser']

logger = logging.getLogger(__name__)


def _load_config(path, method=None):
    """Defaults, then the scenario file (*CONFIG_PATH* when none is given and
    it exists), then the --method override
    """
    config = ScenarioConfig(channel=core.config().channel)
    if path is None and os.path.exists(core.CONFIG_PATH):
        path = core.CONFIG_PATH
    if path is not None:
        config.load(path)
    if method is not None:
        config.set('method', method)
    return config.validate()


def _distances(rows, columns):
    if not rows:
        raise errors.InvalidInputException('no sweep rows')
    return {column: zero_key_distance(rows, column) for column in columns
            if getattr(rows[0], column) is not None}


def _print_distances(distances, label=None):
    for column, distance in distances.items():
        text = 'none' if distance is None else f'{distance:.3f} km'
        prefix = f'{label} ' if label else ''
        print(f'{prefix}{column}: {text}')


def cmd_sweep(args):
    config = _load_config(args.config, args.method)
    output = args.out or config.output
    if output is None:
        raise errors.ConfigException('output', 'no output path, use --out')
    rows = run_sweep(config)
    emit_csv(rows, output)
    _print_distances(_distances(rows, RATE_COLUMNS))


def cmd_figure(args):
    channel = _load_config(args.config).channel
    for config in preset(args.command, channel=channel):
        if args.method is not None:
            config.set('method', args.method)
        rows = run_sweep(config)
        path = scenario_path(args.out, config.name)
        emit_csv(rows, path)
        _print_distances(_distances(rows, RATE_COLUMNS), label=config.name)


def cmd_fig3(args):
    if args.points < 2:
        raise errors.InvalidInputException(f'--points {args.points!r} must be at least 2')
    if args.mu <= 0:
        raise errors.InvalidInputException(f'mu = {args.mu!r} must be positive')
    grid = [0.5 * i / (args.points - 1) for i in range(args.points)]
    emit_csv(fig3_table(args.mu, grid), args.out, header=FIG3_COLUMNS)


def cmd_zero_distance(args):
    if args.csv is not None:
        rows = read_csv(args.csv)
    else:
        rows = run_sweep(_load_config(args.config, args.method))
    columns = [args.column] if args.column else RATE_COLUMNS
    for column in columns:
        if column not in RATE_COLUMNS:
            raise errors.UnknownColumnException(column)
    _print_distances(_distances(rows, columns))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='qkdleak',
        description='Decoy-state BB84 key rates under a passive source side channel')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log debug messages')
    commands = parser.add_subparsers(dest='command', required=True)

    sweep = commands.add_parser('sweep', help='sweep the configured scenario')
    sweep.add_argument('--config', help='scenario file')
    sweep.add_argument('--out', help='CSV output path (overrides "output")')
    sweep.add_argument('--method', choices=METHODS)
    sweep.set_defaults(func=cmd_sweep)

    for name, text in (('fig1', 'side channel attack only'),
                       ('fig2', 'cloner and side channel attack')):
        figure = commands.add_parser(name, help=f'{text}, one CSV per imbalance')
        figure.add_argument('--out', required=True, help='CSV output path stem')
        figure.add_argument('--config', help='scenario file for channel overrides')
        figure.add_argument('--method', choices=METHODS)
        figure.set_defaults(func=cmd_figure)

    fig3 = commands.add_parser('fig3', help='imbalance against HOM visibility')
    fig3.add_argument('--out', required=True, help='CSV output path')
    fig3.add_argument('--mu', type=float, default=core.MU)
    fig3.add_argument('--points', type=int, default=FIG3_POINTS)
    fig3.set_defaults(func=cmd_fig3)

    zero = commands.add_parser('zero-distance', help='print zero-key distances')
    source = zero.add_mutually_exclusive_group()
    source.add_argument('--config', help='scenario file to sweep')
    source.add_argument('--csv', help='previously written sweep')
    zero.add_argument('--column', help=f'one of {", ".join(RATE_COLUMNS)}')
    zero.add_argument('--method', choices=METHODS)
    zero.set_defaults(func=cmd_zero_distance)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    logger.debug('Arguments: %s', vars(args))

    try:
        args.func(args)
    except errors.QKDLeakException as e:
        print(f'error: {e}', file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f'error: {e}', file=sys.stderr)
        return errors.OutputException.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
