"""Defines the ``histick clean`` CLI"""

import sys
import click

from histick.general import log

from histick.general.datadir import Datadir
from histick.general.config import Config

@click.command('reports',
        help='Delete contents of the histick/reports directory')
def clean_reports():
    """
    Deletes the contents of the ``histick/reports`` directory

    """

    ad = Datadir()
    ad.clean_reports()

@click.command('logs',
        help='Delete contents of the histick/logs directory')
def clean_logs():
    """
    Deletes the contents of the ``histick/logs`` directory

    """

    ad = Datadir()
    ad.clean_logs()

@click.command('config',
        help='Delete the histick config file')
def clean_config():
    """
    Deletes the ``histick`` config file

    """

    cfg = Config()
    cfg.clean_config()

@click.command('all', help="""Delete the histick data directory

        Asks for confirmation; the config file is kept.

        """)
def clean_all():
    """
    Deletes all ``histick`` data directories

    """

    proceed = log.ask_yes_no('You are about to delete all histick reports and logs. Do you want to proceed? [Y/n]\n')

    if proceed == 'Y':

        ad = Datadir()
        ad.clean_all_directories()

    else:

        click.echo('Stopping.')
        sys.exit()

@click.group(help='Delete contents of the histick data directory')
def clean_cli():
    """
    Delete contents of the histick data directory

    Example usage:

        histick clean reports

        histick clean all

    """

clean_cli.add_command(clean_reports)
clean_cli.add_command(clean_logs)
clean_cli.add_command(clean_config)
clean_cli.add_command(clean_all)
