from django.apps import AppConfig


class AiryConfig(AppConfig):
    name = "hoairy.airy"
