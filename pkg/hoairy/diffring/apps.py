from django.apps import AppConfig


class DiffringConfig(AppConfig):
    name = "hoairy.diffring"
