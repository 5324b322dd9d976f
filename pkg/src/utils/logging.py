import logging
import os
import sys
from utils.helpers.time import log_date

PLAIN_LINE = "[%(asctime)s] [%(levelname)-5.5s] [%(module)s::%(lineno)d %(funcName)s]: %(message)s"

# Console lines colored by level; the file handler gets PLAIN_LINE
class CustomFormatter(logging.Formatter):
    reset = "\x1b[0m"
    LEVEL_COLORS = {
        logging.DEBUG: "\x1b[1;30m\x1b[47m",
        logging.INFO: "\x1b[1;30m\x1b[42m",
        logging.WARNING: "\x1b[1;30m\x1b[43m",
        logging.ERROR: "\x1b[1;30m\x1b[41m",
        logging.CRITICAL: "\x1b[31m\x1b[45m",
    }

    def __init__(self):
        super().__init__()
        self._formatters = {
            level: logging.Formatter(
                "\x1b[1;34m[%(asctime)s]{r} {c}[%(levelname)-5.5s]{r} \x1b[1;33m[%(module)s::%(lineno)d %(funcName)s]:{r} %(message)s{r}".format(
                    r=self.reset, c=color))
            for level, color in self.LEVEL_COLORS.items()
        }

    def format(self, record):
        formatter = self._formatters.get(record.levelno, self._formatters[logging.INFO])
        try:
            return formatter.format(record)
        except UnicodeEncodeError:
            # consoles without utf-8
            record.msg = str(record.msg).encode('ascii', 'replace').decode('ascii')
            return formatter.format(record)

def setup_logger(log_level: str = "INFO", log_dir: str = None, silent: bool = False):
    logger = logging.getLogger()
    logger.setLevel(getattr(logging, log_level))
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        file_formatter = logging.Formatter(PLAIN_LINE)
        file_handler = logging.FileHandler(
            os.path.join(log_dir, "{}.log".format(log_date())))
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)

    if not silent:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(CustomFormatter())
        logger.addHandler(console_handler)
