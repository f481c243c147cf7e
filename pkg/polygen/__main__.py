import sys

from polygen.cli.main import main

sys.exit(main())
