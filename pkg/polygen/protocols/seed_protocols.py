from collections.abc import Sequence
from typing import Protocol

from polygen.constants.types import ComplexArray


class SeedRecursion(Protocol):
    @property
    def order(self) -> int:
        """
        Number of past coefficient vectors one step consumes.
        """
        ...

    @property
    def arity(self) -> int | None:
        """
        Number of coefficients, or None when only known after evaluation.
        """
        ...

    def step(self, history: Sequence[ComplexArray], ell: int) -> ComplexArray:
        """
        Returns y(ell + order) from y(ell), ..., y(ell + order - 1).
        """
        ...

    def closed_form(self, initial: Sequence[ComplexArray], ell: int) -> ComplexArray:
        """
        Returns y(ell) from the initial vectors without stepping.
        """
        ...
