#!/usr/bin/env python3
"""
entrydeterrence - Main entry point for the command line interface

Usage without installing the package:

    python main.py solve --entry-cost 5
    python main.py sweep --entry-cost-range 0:6:0.5
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from entrydeterrence.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
