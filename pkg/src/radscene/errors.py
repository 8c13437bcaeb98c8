"""Exception hierarchy shared by all radscene modules."""


class RadSceneError(Exception):
    """Base class for all contract violations raised by this package."""


# --- ingest ---------------------------------------------------------------

class MissingLabelColumn(RadSceneError):
    pass


class NonNumericCell(RadSceneError):
    def __init__(self, row, col):
        self.row = row
        self.col = col
        super().__init__(f"non-numeric or non-finite cell at row {row}, column {col!r}")


class EmptyDataset(RadSceneError):
    pass


class UnknownOverrideName(RadSceneError):
    pass


# --- numerics -------------------------------------------------------------

class NotSymmetric(RadSceneError):
    pass


class NonFinite(RadSceneError):
    pass


class OutOfRange(RadSceneError):
    pass


# --- gdt ------------------------------------------------------------------

class ValueOutsideSupport(RadSceneError):
    def __init__(self, feature, value):
        self.feature = feature
        self.value = value
        super().__init__(f"value {value!r} not in the fitted support of feature {feature!r}")


class DegenerateGroup(RadSceneError):
    pass


# --- mrp ------------------------------------------------------------------

class ShapeMismatch(RadSceneError):
    pass


class SingularT(RadSceneError):
    pass


class SingularReducedT(RadSceneError):
    def __init__(self, rank, size):
        self.rank = rank
        self.size = size
        super().__init__(f"reduced total SSCP is rank deficient (rank {rank} of {size})")


# --- anchors / radviz -----------------------------------------------------

class TooFewAnchors(RadSceneError):
    pass


class AnchorDimensionMismatch(RadSceneError):
    pass


class TooFewCoordinates(RadSceneError):
    pass


# --- evalsim --------------------------------------------------------------

class NotPositiveDefinite(RadSceneError):
    pass


class TooFewRecords(RadSceneError):
    pass
