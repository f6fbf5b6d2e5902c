"""Module entry point: python3 -m tmcv."""

import sys

from .cli import main

sys.exit(main())
