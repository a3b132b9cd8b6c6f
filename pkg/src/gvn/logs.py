import logging
import warnings
from typing import Optional

logger = logging.getLogger("gvn")


""" info('settled %s events', 12) """
info = logger.info


""" debug('cycle %s of %s', 3, 1000) """
debug = logger.debug

TRACE = logging.DEBUG - 5


def add_logging_level(level_name: str, level_num: int, method_name: Optional[str] = None) -> bool:
    """Register a custom level on the `logging` module and on the active logger class.

    `level_name` becomes an attribute of `logging` holding `level_num`, and
    `method_name` (default: `level_name.lower()`) becomes a logging method on
    both `logging` and `logging.getLoggerClass()`.

    Example::
    -------
    >>> add_logging_level('TRACE', logging.DEBUG - 5)
    >>> logging.getLogger('gvn').trace('event %s', 'applied')

    Returns:
        bool: False when the level or method already exists and nothing was changed.
    """
    if not method_name:
        method_name = level_name.lower()

    if hasattr(logging, level_name) or hasattr(logging, method_name) or hasattr(logging.getLoggerClass(), method_name):
        # Logging is process-global; another library may have registered the same level first.
        warnings.warn(f"Logging level {level_name} or logging method {method_name} already defined. Skipping.")
        return False

    def log_for_level(self, message, *args, **kwargs):  # type: ignore[no-untyped-def]
        if self.isEnabledFor(level_num):  # type: ignore[misc]
            self._log(level_num, message, args, **kwargs)  # type: ignore[misc]

    def log_to_root(message, *args, **kwargs):  # type: ignore[no-untyped-def]
        logging.log(level_num, message, *args, **kwargs)  # type: ignore[misc]

    logging.addLevelName(level_num, level_name)
    setattr(logging, level_name, level_num)
    setattr(logging.getLoggerClass(), method_name, log_for_level)  # type: ignore[misc]
    setattr(logging, method_name, log_to_root)  # type: ignore[misc]

    return True


def initialize_gvn_logging() -> None:
    if logging.getLevelName(TRACE) == "TRACE":
        return
    add_logging_level("TRACE", TRACE)


def configure_console_logging(verbosity: int) -> None:
    """Attach a stderr handler to the `gvn` logger.

    Args:
        verbosity (int): 0 leaves logging untouched, 1 selects INFO, 2 DEBUG and 3 or more TRACE.
    """
    if verbosity <= 0:
        return
    level = {1: logging.INFO, 2: logging.DEBUG}.get(verbosity, TRACE)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
