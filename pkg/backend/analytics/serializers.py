# analytics/serializers.py
from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from epidemic.presets import get_preset
from epidemic.sweep import SweepConfig
from fractional.exceptions import FracToolkitError
from fractional.kernel import check_order, make_grid, refine_grid
from fractional.solvers import Predictor
from .models import RunConfig

PREDICTOR_CHOICES = [predictor.value for predictor in Predictor]


class SweepConfigSerializer(serializers.Serializer):
    k1 = serializers.FloatField(default=1.0, min_value=0)
    k2 = serializers.FloatField(default=0.001)
    t_max_control = serializers.FloatField(default=1.0, min_value=0)
    tol_percent = serializers.FloatField(default=0.001)
    relaxation = serializers.FloatField(default=0.5)
    max_iterations = serializers.IntegerField(required=False, min_value=1)
    predictor = serializers.ChoiceField(choices=PREDICTOR_CHOICES, required=False)

    def validate_k2(self, value):
        if value <= 0:
            raise serializers.ValidationError("k2 must be positive")
        return value

    def validate_tol_percent(self, value):
        if value <= 0:
            raise serializers.ValidationError("tolerance must be positive")
        return value

    def validate_relaxation(self, value):
        if not 0 < value <= 1:
            raise serializers.ValidationError("relaxation must lie in (0, 1]")
        return value

    def create(self, validated_data):
        return SweepConfig(**validated_data)


class RunConfigSerializer(serializers.Serializer):
    scenario = serializers.ChoiceField(choices=RunConfig.SCENARIOS)
    method = serializers.ChoiceField(choices=['euler', 'pece'], default='pece')
    preset = serializers.CharField(required=False)
    alpha = serializers.FloatField(required=False, allow_null=True)
    n_points = serializers.IntegerField(required=False)
    t_final = serializers.FloatField(required=False)
    output_dir = serializers.CharField(required=False)
    predictor = serializers.ChoiceField(choices=PREDICTOR_CHOICES, default=Predictor.APPENDIX.value)
    refine = serializers.IntegerField(required=False)
    sweep = SweepConfigSerializer(required=False, allow_null=True)

    def validate_preset(self, value):
        try:
            get_preset(value)
        except FracToolkitError as exc:
            raise serializers.ValidationError(str(exc))
        return value

    def validate_alpha(self, value):
        if value is not None:
            try:
                check_order(value)
            except FracToolkitError as exc:
                raise serializers.ValidationError(str(exc))
        return value

    def validate(self, attrs):
        defaults = settings.FRACSIM
        attrs.setdefault('preset', defaults['DEFAULT_PRESET'])
        attrs.setdefault('n_points', defaults['N_POINTS'])
        attrs.setdefault('t_final', defaults['T_FINAL'])
        attrs.setdefault('output_dir', defaults['OUTPUT_DIR'])
        attrs.setdefault('refine', defaults['REFINE'])

        params = get_preset(attrs['preset'])
        if attrs.get('alpha') is not None:
            params = params.with_alpha(attrs['alpha'])
        attrs['params'] = params

        try:
            grid = make_grid(params.alpha, attrs['t_final'], attrs['n_points'])
            refine_grid(grid, attrs['refine'])
        except FracToolkitError as exc:
            raise serializers.ValidationError({'grid': str(exc)})

        if attrs['scenario'] == RunConfig.FOCP and attrs.get('sweep') is None:
            attrs['sweep'] = {}
        return attrs

    def create(self, validated_data):
        sweep = validated_data.pop('sweep', None)
        validated_data.pop('alpha', None)
        if validated_data['scenario'] == RunConfig.FOCP:
            sweep_data = dict(sweep or {})
            sweep_data.setdefault('max_iterations', settings.FRACSIM['MAX_ITERATIONS'])
            sweep_data.setdefault('predictor', validated_data['predictor'])
            validated_data['sweep'] = SweepConfigSerializer().create(sweep_data)
        validated_data['output_dir'] = Path(validated_data['output_dir'])
        validated_data['predictor'] = Predictor(validated_data['predictor'])
        return RunConfig(**validated_data)


def describe_errors(errors, prefix=''):
    """Flatten serializer errors into one diagnostic line."""
    parts = []
    for field, messages in errors.items():
        name = f"{prefix}{field}"
        if isinstance(messages, dict):
            parts.append(describe_errors(messages, prefix=f"{name}."))
        else:
            parts.append(f"{name}: {' '.join(str(message) for message in messages)}")
    return '; '.join(parts)
