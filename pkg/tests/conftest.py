from hypothesis import settings

# Exact big-rational cases can be slow individually; correctness, not
# latency, is what these suites check.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
