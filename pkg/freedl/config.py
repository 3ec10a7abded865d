"""
Global Configuration for the Reasoner
"""
import os
import logging

# Type elimination: abort when the type space grows beyond this
MAX_TYPES = int(os.getenv("FREEDL_MAX_TYPES", str(2**20)))

# Mosaic search for ALCOuι referring expressions
MOSAIC_BUDGET = int(os.getenv("FREEDL_MOSAIC_BUDGET", str(2**14)))
MOSAIC_BRANCH_LIMIT = int(os.getenv("FREEDL_MOSAIC_BRANCHES", "20000"))

# Brute-force oracle: interpretations visited per call
ORACLE_BUDGET = int(os.getenv("FREEDL_ORACLE_BUDGET", "2000000"))

# Referring expression enumeration
ENUM_MAX_SIZE = int(os.getenv("FREEDL_ENUM_MAX_SIZE", "7"))
ENUM_LIMIT = int(os.getenv("FREEDL_ENUM_LIMIT", "200000"))

# Batch worker pool
WORKERS = int(os.getenv("FREEDL_WORKERS", "4"))

# "direct" or "translation"
SAT_ROUTE = os.getenv("FREEDL_SAT_ROUTE", "translation")
# Satisfiability checks behind entailment, referring expressions and the goldens
ENTAIL_ROUTE = os.getenv("FREEDL_ENTAIL_ROUTE", "direct")

LOGGING_LEVEL = logging.INFO

# Secret for session management
SECRET_KEY = os.getenv("SECRET_KEY", "sup3r-s3cr3t")
