import sys

from primetri.cli import main

sys.exit(main())
