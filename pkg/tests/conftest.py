from hypothesis import settings

# big-rational arithmetic is bursty; wall-clock deadlines just add flakes
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
