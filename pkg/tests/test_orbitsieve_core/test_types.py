import typing as t

from orbitsieve_core import BigInt
from pydantic import BaseModel


class _Model(BaseModel):
    values: t.List[BigInt]


def test_big_int_accepts_ints_and_strings() -> None:
    model = _Model(values=[2**100, '12345678901234567890123'])

    assert model.values == [2**100, 12345678901234567890123]


def test_big_int_serializes_to_strings() -> None:
    model = _Model(values=[-(2**80)])

    assert model.model_dump_json() == '{"values":["-1208925819614629174706176"]}'
    assert _Model.model_validate_json(model.model_dump_json()) == model
