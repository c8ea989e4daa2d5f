from django.conf import settings
from rest_framework import serializers

from .exceptions import TrigSplineError
from .factors import ConvergenceFactor, FactorKind
from .grids import GridFamily, GridSpec
from .kernels import FixedTerms, TailTolerance
from .splines import SUPPORTED_PAIRS, SplineConfig

FAMILY_CHOICES = [family.value for family in GridFamily]
FACTOR_CHOICES = [kind.value for kind in FactorKind]
FORMAT_CHOICES = ['csv', 'json']


def first_error(errors):
    """Flatten serializer errors into one line for a command-line message."""
    parts = []
    for name, messages in errors.items():
        if isinstance(messages, dict):
            messages = [first_error(messages)]
        text = '; '.join(str(message) for message in messages)
        parts.append(text if name == 'non_field_errors' else f'{name}: {text}')
    return ', '.join(parts)


class TruncationSerializer(serializers.Serializer):
    """
    Serializer for truncation flags.
    """
    trunc_terms = serializers.IntegerField(required=False, allow_null=True, min_value=0)
    trunc_tol = serializers.FloatField(required=False, allow_null=True, min_value=0)

    def validate(self, attrs):
        if attrs.get('trunc_terms') is not None and attrs.get('trunc_tol') is not None:
            raise serializers.ValidationError('give either --trunc-terms or --trunc-tol, not both')
        if attrs.get('trunc_tol') == 0:
            raise serializers.ValidationError('--trunc-tol must be positive')
        return attrs

    def build_truncation(self):
        data = self.validated_data
        defaults = settings.TRIGSPLINE
        if data.get('trunc_terms') is not None:
            return FixedTerms(data['trunc_terms'])
        return TailTolerance(
            tolerance=data.get('trunc_tol') or defaults['TRUNC_TOL'],
            max_terms=defaults['TRUNC_MAX_TERMS'],
            conditional_terms=defaults['CONDITIONAL_TERMS'],
        )


class GridSerializer(serializers.Serializer):
    """
    Serializer for a grid selection.
    """
    family = serializers.ChoiceField(choices=FAMILY_CHOICES)
    indicator = serializers.ChoiceField(choices=[0, 1])
    n = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        try:
            attrs['grid'] = GridSpec(attrs['family'], attrs['indicator'], attrs['n'])
        except TrigSplineError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def create(self, validated_data):
        return validated_data['grid']


class SplineConfigSerializer(TruncationSerializer):
    """
    Serializer for the flags that fix one spline.
    """
    family = serializers.ChoiceField(choices=FAMILY_CHOICES)
    i1 = serializers.ChoiceField(choices=[0, 1])
    i2 = serializers.ChoiceField(choices=[0, 1])
    factor = serializers.ChoiceField(choices=FACTOR_CHOICES)
    r = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=0, default=0)
    n = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        family = GridFamily(attrs['family'])
        pair = (attrs['i1'], attrs['i2'])
        if pair not in SUPPORTED_PAIRS[family]:
            supported = ', '.join(f'{i1},{i2}' for i1, i2 in sorted(SUPPORTED_PAIRS[family]))
            raise serializers.ValidationError(
                f'--i1 {pair[0]} --i2 {pair[1]} is not supported for {family.value} splines '
                f'(supported: {supported})'
            )
        if attrs['q'] > attrs['r']:
            raise serializers.ValidationError({'q': [f'must not exceed r={attrs["r"]}']})
        try:
            GridSpec(family, attrs['i2'], attrs['n'])
        except TrigSplineError as exc:
            raise serializers.ValidationError({'n': [str(exc)]})
        return attrs

    def create(self, validated_data):
        return SplineConfig(
            family=GridFamily(validated_data['family']),
            i1=validated_data['i1'],
            i2=validated_data['i2'],
            factor=ConvergenceFactor(FactorKind(validated_data['factor'])),
            r=validated_data['r'],
            q=validated_data['q'],
            n_nodes=validated_data['n'],
            truncation=self.build_truncation(),
        )


class PointsSerializer(serializers.Serializer):
    """
    Serializer for the `--points` flag: `dense:K` or `list:FILE`.
    """
    points = serializers.CharField()

    def validate_points(self, value):
        kind, _, argument = value.partition(':')
        if kind == 'dense':
            try:
                count = int(argument)
            except ValueError:
                raise serializers.ValidationError(f'dense point count must be an integer, got {argument!r}')
            if count < 1:
                raise serializers.ValidationError('dense point count must be >= 1')
            return ('dense', count)
        if kind == 'list' and argument:
            return ('list', argument)
        raise serializers.ValidationError(f'expected dense:K or list:FILE, got {value!r}')
