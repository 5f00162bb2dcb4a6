import sys

from foldfront.cli import main

sys.exit(main())
