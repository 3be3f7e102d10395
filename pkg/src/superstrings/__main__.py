import sys

from superstrings.cli import main

sys.exit(main())
