"""SVM app configuration."""
from django.apps import AppConfig


class SvmConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.svm"
    verbose_name = "Support Vector Machine"
