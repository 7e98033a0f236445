import hypothesis

hypothesis.settings.register_profile("exact", deadline=None)
hypothesis.settings.load_profile("exact")
