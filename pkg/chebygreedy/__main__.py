import sys

from chebygreedy.harness.cli import main


sys.exit(main())
