import sys

from wgraphs.harness.cli import main

sys.exit(main())
