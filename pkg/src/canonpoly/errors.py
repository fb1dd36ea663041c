"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all canonpoly errors."""


class NonPrimeCharacteristic(Error):
    pass


class ReducibleModulus(Error):
    pass


class WrongModulusDegree(Error):
    pass


class ZeroInverse(Error):
    pass


class IndexOutOfRange(Error):
    pass


class ShapeMismatch(Error):
    pass


class NotInvertible(Error):
    pass


class NotEquivariant(Error):
    """The function table does not commute with the q-power map."""


class NotPreserving(Error):
    """The function table moves some element out of its subfield stratum."""


class TooLarge(Error):
    """An exhaustive operation exceeds the configured feasibility bound."""


class DegenerateField(Error):
    pass
