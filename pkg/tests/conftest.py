import os

from hypothesis import HealthCheck, settings

# Fixed seed, no example database: property runs are reproducible.
settings.register_profile(
    "fixed",
    derandomize=True,
    database=None,
    max_examples=int(os.environ.get("X1P_HYPOTHESIS_EXAMPLES", "40")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")
