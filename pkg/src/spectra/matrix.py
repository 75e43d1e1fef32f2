from typing import Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.core.exceptions import InputError


class QuotientMatrix(BaseModel):
    """Quotient matrix S = (s_ij) of a (candidate) perfect k-coloring.

    Serialises to the quotient matrix file format ``{"k": int, "rows": [[int]]}``.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_shape(self) -> "QuotientMatrix":
        if len(self.rows) != self.k:
            raise ValueError(f"Expected {self.k} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.k:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {self.k}")
            if any(entry < 0 for entry in row):
                raise ValueError(f"Row {i} has a negative entry: {list(row)}")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "QuotientMatrix":
        return cls(k=len(rows), rows=tuple(tuple(row) for row in rows))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def check_row_sums(self, degree: int) -> None:
        for i, total in enumerate(self.row_sums()):
            if total != degree:
                raise InputError(
                    f"Row {i} of the quotient matrix sums to {total}, the graph degree is {degree}"
                )

    def is_tridiagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.k)
            for j in range(self.k)
            if abs(i - j) > 1
        )

    def is_extended_shape(self) -> bool:
        """3 colours with s_00 = s_02 = s_20 = 0 and s_10 = 1."""
        if self.k != 3:
            return False
        return self[0, 0] == 0 and self[0, 2] == 0 and self[2, 0] == 0 and self[1, 0] == 1

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix.from_list([list(row) for row in self.rows], ZZ)

    def to_dict(self) -> dict:
        return {"k": self.k, "rows": [list(row) for row in self.rows]}

    def __str__(self):
        return str([list(row) for row in self.rows])
