#!/usr/bin/env python3
"""
Standalone entry point for the vmreg command-line tool.
Run this file directly, e.g. ``python run.py eval --m 0 --x 1``.
"""

import sys
from pathlib import Path

# Make the package importable when run from a checkout
sys.path.insert(0, str(Path(__file__).parent))

if __name__ == "__main__":
    from src.app import main

    sys.exit(main())
