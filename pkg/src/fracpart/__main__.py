import sys

from fracpart.cli import main

sys.exit(main())
