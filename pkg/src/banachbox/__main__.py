import sys

from banachbox.cli import main

sys.exit(main())
