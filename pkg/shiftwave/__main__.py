# shiftwave/__main__.py

import sys

from shiftwave.cli import main

if __name__ == "__main__":
    sys.exit(main())
