"""Constants for the pybregman command line."""
from __future__ import annotations

EXIT_CONVERGED = 0
EXIT_ERROR = 1
EXIT_ITER_CAP = 2

INSTANCE_FILE = "instance.bin"
TRACE_FILE = "trace.csv"
SUMMARY_FILE = "summary.json"
REPORT_FILE = "report.json"
TABLE_MARKDOWN_FILE = "table.md"
TABLE_CSV_FILE = "table.csv"

REFERENCE_TABLES = "reference_tables.json"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# repro-table1 at full scale
TABLE1_N = 2000
# repro-table2 rows up to this n unless --max-n says otherwise
TABLE2_MAX_N = 200
TABLE2_RANK = 10

# verify suites
EQUIVALENCE_INSTANCES = 10
EQUIVALENCE_DIMS = (100, 400)
EQUIVALENCE_ITERS = 200
EQUIVALENCE_RTOL = 1e-8
SCHEDULE_REDUCTION_RTOL = 1e-12
RATE_DIMS = (100, 40, 8)
RATE_ITERS = 500
DUAL_IDENTITY_TOL = 1e-10
PROX_SAMPLES = 100
NONEXPANSIVE_PAIRS = 10_000
GRADIENT_INSTANCES = 5
GRADIENT_POINTS = 20
GRADIENT_RTOL = 1e-5
LIPSCHITZ_PAIRS = 1000
CONVEXITY_TOL = 1e-10
CONSTRAINED_N = 400
