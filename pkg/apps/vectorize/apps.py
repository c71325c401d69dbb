"""Vectorize app configuration."""
from django.apps import AppConfig


class VectorizeConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.vectorize"
    verbose_name = "Vectorize"
