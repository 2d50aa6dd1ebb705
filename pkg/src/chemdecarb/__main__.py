"""Main entry point for the chemdecarb CLI application."""

import sys

from chemdecarb.ui.cli import main

if __name__ == "__main__":
    sys.exit(main())
