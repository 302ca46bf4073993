"""
Initializes the ``histick`` configuration file and creates
the default report and log directories
"""

import click

from histick.general import log
from histick.general import utils

from histick.general.datadir import Datadir
from histick.general.config import Config

def create_config():
    """
    Create the ``histick`` config file.

    """

    cfg = Config()
    cfg.create_config_file()

def create_directories():
    """
    Create the ``histick`` data directories.

    """

    ad = Datadir()
    ad.create_directories()

def initialize_histick():
    """
    Create the ``histick`` config file and data directories.

    """

    dashes = log.get_log_dashes()

    start_datetime = utils.get_current_datetime()

    click.echo(log.histick_start(start_datetime))

    create_config()
    create_directories()

    click.echo(dashes)

    click.echo('histick initialization complete!')

    click.echo(log.histick_end(start_datetime))
