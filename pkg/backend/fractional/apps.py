from django.apps import AppConfig

class FractionalConfig(AppConfig):
    name = 'fractional'
    verbose_name = 'Fractional Calculus Kernel'
