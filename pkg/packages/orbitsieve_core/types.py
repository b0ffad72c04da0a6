import typing as t

import typing_extensions as te
from pydantic import GetJsonSchemaHandler
from pydantic.json_schema import JsonSchemaValue
from pydantic_core import core_schema


class _BigIntPydanticAnnotation:
    @classmethod
    def __get_pydantic_core_schema__(
        cls,
        _source_type: t.Any,
        _handler: t.Callable[[t.Any], core_schema.CoreSchema],
    ) -> core_schema.CoreSchema:
        """Integers of any size.

        * Python ints pass unchanged
        * Decimal strings are parsed exactly
        * Serialization always emits a decimal string, so values survive JSON readers limited to 53 bits
        """

        def validate_from_str(value: str) -> int:
            return int(value.strip(), 10)

        from_str_schema = core_schema.chain_schema(
            [
                core_schema.str_schema(),
                core_schema.no_info_plain_validator_function(validate_from_str),
            ]
        )

        return core_schema.json_or_python_schema(
            json_schema=core_schema.union_schema([core_schema.int_schema(), from_str_schema]),
            python_schema=core_schema.union_schema([core_schema.int_schema(strict=True), from_str_schema]),
            serialization=core_schema.plain_serializer_function_ser_schema(lambda instance: str(instance)),
        )

    @classmethod
    def __get_pydantic_json_schema__(
        cls, _core_schema: core_schema.CoreSchema, handler: GetJsonSchemaHandler
    ) -> JsonSchemaValue:
        return handler(core_schema.str_schema())


BigInt = te.Annotated[int, _BigIntPydanticAnnotation]
