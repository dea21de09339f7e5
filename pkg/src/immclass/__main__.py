import sys

from immclass.cli import main

sys.exit(main())
