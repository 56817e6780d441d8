from hypothesis import settings

# exhaustive enumerations inside property bodies can be slow on loaded CI
# machines; timing flakiness is worse than a slightly slower suite
settings.register_profile("default", deadline=None)
settings.load_profile("default")
