#!/usr/bin/env python3
"""
Quantum Reading - Launcher
==========================

Runs the command line from a checkout without installing the package:

    python scripts/quantum_reading.py design --nbar-max 1000 --K 1
    python scripts/quantum_reading.py sweep-delta --out delta.csv
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
