"""Exception hierarchy for the hirota package."""


class HirotaError(Exception):
    """Base class for every error raised by the library."""


class UnknownVariableError(HirotaError, KeyError):
    """A variable was requested that is not in the polynomial's table."""

    def __init__(self, name, table=()):
        self.name = name
        self.table = tuple(table)
        super().__init__(f"unknown variable {name!r} (table: {', '.join(self.table) or 'empty'})")

    def __str__(self):
        return self.args[0]


class InvalidParameterError(HirotaError, ValueError):
    """A numeric parameter is outside its admissible range."""


class PreconditionError(HirotaError, ValueError):
    """An operation was called with arguments violating its precondition."""


class UnboundConstantError(HirotaError, KeyError):
    """Symbolic constants were left without a binding during specialization."""

    def __init__(self, names):
        self.names = sorted(names)
        super().__init__(f"unbound constants: {', '.join(self.names)}")

    def __str__(self):
        return self.args[0]


class OutOfScopeError(HirotaError, ValueError):
    """The request belongs to another part of the classification."""


class SolverError(HirotaError):
    """A remainder constraint could not be solved for any single constant."""


class ParseError(HirotaError, ValueError):
    """Malformed textual input (JSON polynomial, operator spec, bindings)."""


class ConfigError(HirotaError, ValueError):
    """Invalid configuration value."""


class CertificateError(HirotaError):
    """A nonexistence certificate could not be established."""
