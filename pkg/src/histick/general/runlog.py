"""Run logs of ``histick`` commands"""

from histick.general import log
from histick.general import utils

from histick.general.datadir import Datadir


class RunLog:
    """
    Logger of one CLI run

    Writes to ``logs/<command>_<YYYYmmdd-HHMMSS>.log`` in the data
    directory when it exists; otherwise only to stderr.

    """

    def __init__(self, command):

        self.command = command
        self.start_datetime = utils.get_current_datetime()

        self.log_path = Datadir().log_path(command, self.start_datetime)
        self.log_name = f'histick.{command}'

        self._logger = log.init_logger(log_path=self.log_path, log_name=self.log_name)

    def info(self, text):
        """Log at INFO level"""

        self._logger.info(text)

    def warning(self, text):
        """Log at WARNING level"""

        self._logger.warning(text)

    def start(self):
        """Log the start banner"""

        self.info(log.histick_start(self.start_datetime, log_path=self.log_path))

    def end(self):
        """Log the end banner and release the log file"""

        self.info(log.histick_end(self.start_datetime))
        self.close()

    def close(self):
        """Detach and close the handlers of this run"""

        for handler in list(self._logger.handlers):
            self._logger.removeHandler(handler)
            handler.close()
