"""
Weighted Oriented Edge Ideals

Edge ideals of vertex-weighted oriented graphs, their strong vertex covers and
irreducible decompositions, and a checker for when symbolic and ordinary
powers coincide.
"""
import logging
import os
import sys

import click
from dotenv import load_dotenv

from woideals.limits import Limits

__version__ = '1.0.0'

_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def load_config(test_config=None):
    """
    Resolve the configuration from the environment.

    A .env file in the working directory is loaded first; test_config
    overrides everything.

    Args:
        test_config (dict, optional): Configuration overrides. Defaults to None.

    Returns:
        dict: COVER_CAP, MAX_POWER, MAX_GENERATORS, JOBS and LOG_LEVEL.
    """
    load_dotenv()
    config = {
        'COVER_CAP': int(os.environ.get('WOIDEALS_COVER_CAP', 24)),
        'MAX_POWER': int(os.environ.get('WOIDEALS_MAX_POWER', 6)),
        'MAX_GENERATORS': int(os.environ.get('WOIDEALS_MAX_GENERATORS', 200_000)),
        'JOBS': int(os.environ.get('WOIDEALS_JOBS', 1)),
        'LOG_LEVEL': os.environ.get('WOIDEALS_LOG_LEVEL', 'WARNING').upper()
    }
    if test_config is not None:
        config.update(test_config)
    return config


def create_cli(test_config=None):
    """
    Create and configure the command-line application.

    Args:
        test_config (dict, optional): Test configuration to override default config. Defaults to None.

    Returns:
        click.Group: The root command group with every command registered.
    """
    config = load_config(test_config)

    @click.group(name='woideals')
    @click.version_option(__version__, prog_name='woideals')
    @click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG logging on stderr.')
    @click.option('--allow-large', is_flag=True, help='Lift the cover enumeration cap.')
    @click.option('--jobs', type=click.IntRange(min=1), help='Worker processes for verify sweeps.')
    @click.option('--max-power', type=click.IntRange(min=1), help='Largest power s accepted.')
    @click.option('--max-generators', type=click.IntRange(min=1), help='Ceiling on any minimal generating set.')
    @click.pass_context
    def cli(ctx, verbose, allow_large, jobs, max_power, max_generators):
        """Edge ideals of weighted oriented graphs and their symbolic powers."""
        level = _LOG_LEVELS[min(verbose, 2)] if verbose else getattr(logging, config['LOG_LEVEL'], logging.WARNING)
        logging.basicConfig(
            stream=sys.stderr,
            level=level,
            format='%(levelname)s %(name)s: %(message)s',
            force=True
        )

        resolved = dict(config)
        for key, value in (('JOBS', jobs), ('MAX_POWER', max_power), ('MAX_GENERATORS', max_generators)):
            if value is not None:
                resolved[key] = value
        limits = Limits.from_config(resolved)
        if allow_large:
            limits = limits.lifted()
        ctx.obj = {'config': resolved, 'limits': limits}

    # Register command groups
    from woideals.commands import seed_fixtures_command
    from woideals.controllers import covers, graphs, symbolic, verify

    for controller in (graphs, covers, symbolic, verify):
        for command in controller.commands:
            cli.add_command(command)
    cli.add_command(seed_fixtures_command)

    return cli
