"""Constants shared across the hirota package."""

# Symbol names
X = 'x'
T = 't'
M = 'm'
CONSTANT_PREFIX = 'c'

# Lowest spatial degree handled by the nonexistence certificate
MIN_CERTIFIED_DEGREE = 5

# Quartic offsets appearing in the z-polynomial combinations:
# z2 + a*z1 = (1/2) m^2 (m-1)^2 (m^4 - 8m^3 + 19m^2 - 12m + 2a)
QUARTIC_BASE = (1, -8, 19, -12, 0)

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

# Environment variable overriding the default parallelism
JOBS_ENV_VAR = 'HIROTA_JOBS'


def constant_name(index: int) -> str:
    """Return the name of the symbolic constant with the given index."""
    return f"{CONSTANT_PREFIX}{index}"
