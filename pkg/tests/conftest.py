from hypothesis import settings

settings.register_profile("exact-symbolic", deadline=None)
settings.load_profile("exact-symbolic")
