"""Entry point for running vmreg as a module (python -m src)."""

import sys

from .main import main

if __name__ == "__main__":
    sys.exit(main())
