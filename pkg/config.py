# config.py

import os

# Load environment variables from .env file for local development
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # python-dotenv not available

MODE_CONFIG = {
    "build": {
        "description": "Prepend the text right-to-left and print the pBWT.",
        "format": "tokens"
    },
    "verify": {
        "description": "Compare the builder against the brute-force oracle after every prepend.",
        "format": "tokens"
    },
    "dump": {
        "description": "Print every sorted rotation with RA, LCP, encodings, F and L.",
        "format": "json"
    },
    "bench": {
        "description": "Time prepends on synthetic texts and print a TSV table.",
        "format": "tokens"
    }
}

OUTPUT_FORMATS = ["tokens", "json"]

# Alphabet defaults
SENTINEL = os.getenv("PBWT_SENTINEL", "$")

# Oracle checks are quadratic in the text length
MAX_VERIFY_LEN = int(os.getenv("PBWT_MAX_VERIFY_LEN", "5000"))

# Leaf load of the dynamic sequence; a leaf splits at twice this size
CHUNK_SIZE = int(os.getenv("PBWT_CHUNK_SIZE", "128"))

# Benchmark schedule: n runs over 2**MIN_EXP .. 2**MAX_EXP
BENCH_SEED = int(os.getenv("PBWT_BENCH_SEED", "42"))
BENCH_MIN_EXP = int(os.getenv("PBWT_BENCH_MIN_EXP", "10"))
BENCH_MAX_EXP = int(os.getenv("PBWT_BENCH_MAX_EXP", "16"))
BENCH_PI_SIZE = int(os.getenv("PBWT_BENCH_PI_SIZE", "4"))
BENCH_SIGMA_SIZE = int(os.getenv("PBWT_BENCH_SIGMA_SIZE", "2"))
# |Π| values timed at n = 2**BENCH_MIN_EXP; empty disables the sweep
BENCH_PI_SWEEP = os.getenv("PBWT_BENCH_PI_SWEEP", "1,2,4,8")

LOG_LEVEL = os.getenv("PBWT_LOG_LEVEL", "INFO").upper()
