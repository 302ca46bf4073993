"""
Handles creation, deletion and checking of the ``histick`` data directory,
which is defined in the ``histick`` configuration file
"""

import os
import click
import platformdirs

from histick.general import log
from histick.general import utils

from histick.general.config import Config, OUTPUT_DIR_ENV


class Datadir:
    """
    Handles creation, deletion and checking of the
    ``histick`` data directory.

    The location is taken from the ``HISTICK_OUTPUT_DIR`` environment
    variable if set, then from the configuration file, and finally
    defaults to ``platformdirs.user_data_dir(appname='histick')``.

    """

    def __init__(self):
        """
        Defines paths to directories in the base directory.

        """

        self.base = self._resolve_base()

        self.reports = os.path.join(self.base, 'reports')
        self.logs = os.path.join(self.base, 'logs')

        self.check_existence()

        self._dashes = log.get_log_dashes()

    @staticmethod
    def _resolve_base():

        override = os.environ.get(OUTPUT_DIR_ENV)

        if override:
            return override

        settings = Config().settings

        if settings and 'GlobalSettings' in settings:
            return settings['GlobalSettings']['data_directory']

        return platformdirs.user_data_dir(appname='histick')

    def check_existence(self):
        """
        Checks the existence of the ``self.base`` directory;
        the ``self._base_exists`` attribute is updated accordingly.
        """

        self._base_exists = utils.directory_exists(self.base)

    @property
    def exists(self):
        """True if the base directory exists"""

        self.check_existence()

        return self._base_exists

    def log_path(self, command, start_datetime):
        """
        Path of the run log for ``command``, or None if the logs
        directory does not exist

        Parameters
        ----------
        command : str
            CLI command name
        start_datetime : str
            Starting datetime in ``%Y%m%d-%H%M%S`` format

        Returns
        -------
        str | None
            Path to the log file

        """

        if not utils.directory_exists(self.logs):
            return None

        return os.path.join(self.logs, f'{command}_{start_datetime}.log')

    def create_directories(self, ask=True):
        """
        Creates ``histick`` data directories. If ``self.base`` already exists,
        the user is prompted if they want to overwrite the directory.

        Parameters
        ----------
        ask : bool
            If False, existing directories are kept without prompting

        """

        if self.exists:

            if not ask:
                os.makedirs(self.reports, exist_ok=True)
                os.makedirs(self.logs, exist_ok=True)
                return

            overwrite = log.ask_yes_no(f'WARNING: histick data base directory exists at {self.base}\nDo you want to overwrite it? All reports and logs will be deleted. [Y/n]\n')

            if overwrite == 'n':

                click.echo('Stopping histick data directory overwriting.')
                click.echo(self._dashes)

                return

            self.clean_all_directories()

            click.echo(f'{self.base} deleted, as requested. Continuing...')
            click.echo(self._dashes)

        os.makedirs(self.base)
        click.echo(f'histick base directory created at {self.base}')

        os.makedirs(self.reports)
        click.echo(f'histick reports directory created at {self.reports}')

        os.makedirs(self.logs)
        click.echo(f'histick logs directory created at {self.logs}')

        self.check_existence()

    def clean_all_directories(self):
        """
        Deletes all ``histick`` data directories.

        """

        if not self.exists:
            click.echo('Nothing to clean.')

        else:
            utils.delete_directory(self.base)

        self.check_existence()

    def clean_reports(self):
        """
        Deletes the files in ``self.reports``

        """

        utils.delete_directory_files(self.reports)

    def clean_logs(self):
        """
        Deletes the files in ``self.logs``

        """

        utils.delete_directory_files(self.logs)
