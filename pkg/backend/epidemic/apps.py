from django.apps import AppConfig

class EpidemicConfig(AppConfig):
    name = 'epidemic'
    verbose_name = 'SEIRS-alpha RSV Model'
