"""Exception types shared across the package."""


class ModelError(ValueError):
    """Base class for invalid model inputs."""


class InvalidInputError(ModelError):
    pass


class InvalidSpecError(InvalidInputError):
    """Structure dimensions violate their invariants."""


class InvalidMaterialError(ModelError):
    """A material lacks the data an operation needs."""


class RegistryError(ModelError):
    """A registry entry is missing or violates its invariants."""


class ConfigError(ModelError):
    """A configuration document or parameter path cannot be applied."""


class FixtureError(ModelError):
    """A claim fixture references an unknown computation."""
