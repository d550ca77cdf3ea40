#!/usr/bin/env python3
"""Re-run every catalog entry and print the expected-vs-actual report.

Equivalent to `morphlift reproduce --all`; exits nonzero on any mismatch.
"""

import sys

from morphlift.cli import cli_main

if __name__ == "__main__":
    sys.exit(cli_main(["reproduce", "--all", *sys.argv[1:]]))
