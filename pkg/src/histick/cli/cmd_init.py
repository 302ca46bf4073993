"""Defines the ``histick init`` CLI"""

import click

from histick.general.initialize import initialize_histick

@click.command('init', help='Initialize the histick config file and data directories')
def init_cli():
    """
    Initialize the config file and data directories

    """

    initialize_histick()
