from django.apps import AppConfig


class BilliardsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "billiards"
    verbose_name = "Pi billiards"
