"""Connectives app configuration."""
from django.apps import AppConfig


class ConnectivesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.connectives"
    verbose_name = "Causal connectives"
