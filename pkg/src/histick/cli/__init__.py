"""Automatically define the ``histick <command>`` CLI

The modules in this directory must be named cmd_<command>.py
    and include a function named <command>_cli()

"""

import pkgutil
import importlib
import click

@click.group(name='histick')
def histick_cli():
    """
    Entry point for the ``histick`` command

    """

for _, module_name, _ in pkgutil.iter_modules(__path__):

    if module_name.startswith('cmd'):

        cmd_name = module_name.split('_', 1)[1]
        cmd_cli = f'{cmd_name}_cli'

        module = importlib.import_module(f'{__name__}.{module_name}')
        command = getattr(module, cmd_cli)

        histick_cli.add_command(command, name=cmd_name)
