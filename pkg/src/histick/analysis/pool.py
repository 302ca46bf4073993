"""Thread pool whose workers log through a queue drained by one server thread"""

import queue
import threading

from concurrent.futures import ThreadPoolExecutor

from histick.general import log

_STOP = object()


class LoggedPool:
    """
    Runs independent tasks in a thread pool

    Workers never touch the logger; they call ``self.log(message)``, which
    puts the message on ``self._queue``. During ``map`` one server thread
    writes queued messages to the run log; it stops on a sentinel once the
    tasks are done. Results come back in submission order.

    """

    def __init__(self, workers=1, log_path=None, log_name='histick'):

        if workers < 1:
            raise ValueError('"workers" must be at least 1.')

        self.workers = workers
        self.log_path = log_path
        self.log_name = log_name

        self._queue = None

    def _wlog(self, text):
        """
        Writes to the run log through the logger object

        """

        _logger = log.init_logger(log_path=self.log_path, log_name=self.log_name)
        _logger.info(text)

    def _log_server(self, message_queue):
        """
        Log messages received from workers until the sentinel arrives

        """

        while True:

            message = message_queue.get()

            try:
                if message is _STOP:
                    return

                self._wlog(message)

            finally:
                message_queue.task_done()

    def log(self, message):
        """Queue a message for the log server, or log directly outside ``map``"""

        if self._queue is None:
            self._wlog(message)

        else:
            self._queue.put(message)

    def map(self, function, items):
        """
        Apply ``function(item, pool)`` to every item

        Returns
        -------
        list
            Results in the order of ``items``

        """

        items = list(items)

        self._queue = queue.Queue()
        server = threading.Thread(target=self._log_server, args=(self._queue,), daemon=True)
        server.start()

        try:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                results = list(executor.map(lambda item: function(item, self), items))

        finally:
            self._queue.put(_STOP)
            server.join()
            self._queue = None

        return results
