"""Bayes app configuration."""
from django.apps import AppConfig


class BayesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.bayes"
    verbose_name = "Naive Bayes"
