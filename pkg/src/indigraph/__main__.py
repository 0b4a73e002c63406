"""Allow ``python -m indigraph`` to invoke the command-line interface."""

import sys

from indigraph.cli import main

if __name__ == "__main__":
    sys.exit(main())
