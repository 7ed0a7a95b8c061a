import logging
from multiprocessing import current_process, parent_process
from typing import Mapping, Optional


def in_main_process() -> bool:
    """Whether the caller runs in the main process rather than in a pool worker."""
    return parent_process() is None


class WorkerLogger(logging.LoggerAdapter):
    """A process-pool-friendly python command line logger."""

    def __init__(
        self,
        name: str = __name__,
        main_process_only: bool = False,
        extra: Optional[Mapping[str, object]] = None,
    ) -> None:
        """Initializes a logger that logs on all processes with the worker name prefixed to
        messages emitted inside pool workers.

        :param name: The name of the logger. Default is ``__name__``.
        :param main_process_only: Whether to force all logs to only occur on the main process.
            Default is `False`.
        :param extra: (Optional) A dict-like object which provides contextual information. See
            `logging.LoggerAdapter`.
        """
        logger = logging.getLogger(name)
        super().__init__(logger=logger, extra=extra)
        self.main_process_only = main_process_only

    def log(self, level: int, msg: str, *args, **kwargs) -> None:
        """Delegate a log call to the underlying logger, after prefixing its message with the
        name of the worker process it's being logged from.

        :param level: The level to log at. Look at `logging.__init__.py` for more information.
        :param msg: The message to log.
        :param args: Additional args to pass to the underlying logging function.
        :param kwargs: Any additional keyword args to pass to the underlying logging function.
        """
        if not self.isEnabledFor(level):
            return

        msg, kwargs = self.process(msg, kwargs)
        if in_main_process():
            self.logger.log(level, msg, *args, **kwargs)
        elif not self.main_process_only:
            self.logger.log(level, f"[{current_process().name}] {msg}", *args, **kwargs)
