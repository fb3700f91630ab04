import sys

from bridgelab.cli import main

sys.exit(main())
