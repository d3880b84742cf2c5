import sys

from cfactor.cli import main

sys.exit(main())
