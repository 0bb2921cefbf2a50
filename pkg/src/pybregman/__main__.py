"""Allow python -m pybregman."""
from pybregman.cli import main

raise SystemExit(main())
