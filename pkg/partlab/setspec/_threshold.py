from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from partlab.util.exceptions import InvalidInputError


class RationalThreshold(BaseModel):
    """Exact argument x = numerator/denominator of a counting function."""

    model_config = ConfigDict(frozen=True)

    numerator: int
    denominator: int = 1

    @model_validator(mode="after")
    def _check_sign(self) -> "RationalThreshold":
        if self.denominator <= 0:
            raise InvalidInputError("Threshold denominator must be positive")
        if self.numerator < 0:
            raise InvalidInputError("Threshold must be nonnegative")
        return self

    @classmethod
    def of(cls, value: "int | Fraction | RationalThreshold") -> "RationalThreshold":
        if isinstance(value, RationalThreshold):
            return value
        value = Fraction(value)
        return cls(numerator=value.numerator, denominator=value.denominator)

    def floor(self) -> int:
        # s <= num/den  <=>  s*den <= num  <=>  s <= num // den, for integer s
        return self.numerator // self.denominator
