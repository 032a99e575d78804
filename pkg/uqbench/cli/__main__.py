import sys

from uqbench.cli.main import main


sys.exit(main())
