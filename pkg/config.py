"""
Fullab Configuration
Environment-driven settings shared by the library and the command line
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Enumeration guard: maximum number of windup attempts for one C_n
ENUMERATION_BUDGET = int(os.getenv('FULLAB_BUDGET', str(2 ** 31)))

# Lexicographic search cap used by seed_for before falling back to a construction
SEED_BUDGET = int(os.getenv('FULLAB_SEED_BUDGET', '200000'))

THREADS = int(os.getenv('FULLAB_THREADS', '1'))

DB_DIR = os.getenv('FULLAB_DB_DIR', 'isomer_db')

LOG_LEVEL = os.getenv('FULLAB_LOG_LEVEL', 'INFO')

# Default (alpha, beta) character parameters for dual graphs
DEFAULT_ALPHA = float(os.getenv('FULLAB_ALPHA', '0.5'))
DEFAULT_BETA = float(os.getenv('FULLAB_BETA', '0.25'))

# Corner truncation convention for (t,(r1,r2,r3))-triangles: ROWS or FULL
CONVENTION = os.getenv('FULLAB_CONVENTION', 'ROWS').upper()

# Largest t for which truncated-triangle templates are generated
MAX_TEMPLATE_T = int(os.getenv('FULLAB_MAX_TEMPLATE_T', '12'))
