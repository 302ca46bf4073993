"""Defines the ``histick config`` CLI"""

import click

from histick.general.config import Config

@click.command('print', help='Print the histick config file')
def show_config():
    """
    Prints the ``histick`` config file.

    """

    cfg = Config()
    cfg.print_config()

@click.command('edit', help="""Edit the contents of the config file

        Example usage:

            histick config edit prime_bound 10000

        The argument after "edit" should be one of the subsections of the config file

        To see the current config file, use:

            histick config print

        """)
@click.argument('option')
@click.argument('value', nargs=-1)
def edit_config(option, value):
    """
    Edit the histick config file by passing a subsection and the new value

    """

    value_str = ' '.join(value)

    cfg = Config()
    cfg.edit_config_by_subsection(subsection=option, value=value_str)

@click.group(help='Print/edit the histick config file')
def config_cli():
    """
    Print/edit the histick config file

    """

config_cli.add_command(show_config)
config_cli.add_command(edit_config)
