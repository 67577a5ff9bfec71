#!/usr/bin/env python3
"""
hirota - exact bilinear computations for the KdV-like equation.

This is the main entry point. It hands the command-line arguments to the
hirota.cli front end, which loads configuration, sets up logging and runs
the requested subcommand.
"""

import sys

from hirota.cli import main

if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
