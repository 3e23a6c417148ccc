"""Exception hierarchy shared by all diskgeo modules."""


class DiskGeoError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidInputError(DiskGeoError):
    """A precondition on the input was violated (bad simplex, wrong codimension, ...)."""


class NotGeodesicReadyError(DiskGeoError):
    """A wall with three or more cofacets was hit while stepping the flow."""


class NonManifoldBoneError(DiskGeoError):
    """The facets around a bone do not form a single closed ring."""


class RecognitionLimitError(DiskGeoError):
    """Recognition was aborted because the complex exceeds the size ceiling.

    The verdict is 'undecided: too large', not a negative answer.
    """

    def __init__(self, size: int, ceiling: int):
        super().__init__(f"undecided: too large ({size} simplices, ceiling {ceiling})")
        self.size = size
        self.ceiling = ceiling


class CatalogError(DiskGeoError):
    """Unknown catalog name or a shipped data file failed its integrity check."""


class InputFormatError(InvalidInputError):
    """A complex or graph file did not parse or violated the schema."""
