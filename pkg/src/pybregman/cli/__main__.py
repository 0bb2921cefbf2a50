"""Allow python -m pybregman.cli."""
from pybregman.cli import main

raise SystemExit(main())
