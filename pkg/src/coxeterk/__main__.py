from __future__ import annotations

import sys

from coxeterk.cli import main

sys.exit(main())
