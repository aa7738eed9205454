import logging
import sys

from tricover.cli import main
from tricover.utils import setup_logging


if __name__ == "__main__":
    setup_logging(level=logging.WARNING)
    sys.exit(main())
