from rest_framework import serializers

from apps.interpolation.exceptions import TrigSplineError
from apps.interpolation.grids import GridFamily, GridSpec
from apps.interpolation.serializers import TruncationSerializer

from .bsplines import ALL_LABELS, BSplineKind

FUNDAMENTAL = 'fundamental'


def _parse_list(value, label):
    items = [item.strip() for item in value.split(',') if item.strip()]
    if not items:
        raise serializers.ValidationError(f'{label} list is empty')
    return items


class BSplineKindSerializer(TruncationSerializer):
    """
    Serializer for one B-spline kind.
    """
    kind = serializers.ChoiceField(choices=list(ALL_LABELS))
    r = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=0, default=0)
    n = serializers.IntegerField(min_value=3)
    indicator = serializers.ChoiceField(choices=[0, 1], default=0)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs['q'] > attrs['r']:
            raise serializers.ValidationError({'q': [f'must not exceed r={attrs["r"]}']})
        try:
            GridSpec(GridFamily.FULL, attrs['indicator'], attrs['n'])
        except TrigSplineError as exc:
            raise serializers.ValidationError({'n': [str(exc)]})
        return attrs

    def create(self, validated_data):
        return BSplineKind.from_label(
            validated_data['kind'],
            validated_data['r'],
            validated_data['q'],
            validated_data['n'],
            self.build_truncation(),
        )


class DeterminantTableSerializer(TruncationSerializer):
    """
    Serializer for the determinant table flags.
    """
    kinds = serializers.CharField(default='all')
    orders = serializers.CharField(default='1,2,3,4,5,11')
    n = serializers.IntegerField(min_value=3, default=9)
    indicator = serializers.ChoiceField(choices=[0, 1], default=0)

    def validate_kinds(self, value):
        if value.strip().lower() == 'all':
            return list(ALL_LABELS)
        labels = [item.upper() for item in _parse_list(value, 'kind')]
        unknown = [label for label in labels if label not in ALL_LABELS]
        if unknown:
            raise serializers.ValidationError(f'unknown kinds {", ".join(unknown)}; use {", ".join(ALL_LABELS)} or all')
        return labels

    def validate_orders(self, value):
        try:
            orders = [int(item) for item in _parse_list(value, 'order')]
        except ValueError:
            raise serializers.ValidationError(f'orders must be integers, got {value!r}')
        if min(orders) < 1:
            raise serializers.ValidationError('orders must be >= 1')
        return orders

    def validate(self, attrs):
        attrs = super().validate(attrs)
        try:
            GridSpec(GridFamily.FULL, attrs['indicator'], attrs['n'])
        except TrigSplineError as exc:
            raise serializers.ValidationError({'n': [str(exc)]})
        return attrs
