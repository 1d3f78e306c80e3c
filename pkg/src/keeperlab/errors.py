"""Exception types raised across the engine."""


class KeeperLabError(Exception):
    """Base class for all library-specific errors."""


class GeometryError(KeeperLabError):
    """Base class for geometric construction failures."""


class NonConvexPolygonError(GeometryError):
    """A polygon argument was required to be convex but is not."""


class DegenerateLineError(GeometryError):
    """A line was specified by two coincident points."""


class DegenerateTriangleError(GeometryError):
    """The shooter-post triangle has zero area, so shadow ratios are undefined."""


class DegenerateProjectionError(GeometryError):
    """A central projection onto the goal plane does not exist for these positions."""


class ModelError(KeeperLabError):
    """Base class for probability-model failures."""


class FeatureMismatchError(ModelError):
    """Feature vector or schema does not match the model's expected features."""


class SingleClassError(ModelError):
    """A training set contained only one label class."""


class WeightsFileError(ModelError):
    """A model weights file is malformed."""


class MatchFileError(KeeperLabError):
    """A match file violates the schema. Carries field-path context."""

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class IneligibleStateError(KeeperLabError):
    """The game state does not meet the conditions for position evaluation."""
