from django.apps import AppConfig


class PainleveConfig(AppConfig):
    name = "hoairy.painleve"
