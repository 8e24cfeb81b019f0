"""Exception types raised across the package."""


class EquivBeamsError(ValueError):
    """Base class for all package errors."""

    code = "error"


class NotHermitianError(EquivBeamsError):
    code = "not_hermitian"


class NotPositiveError(EquivBeamsError):
    code = "not_positive"


class DimensionMismatchError(EquivBeamsError):
    code = "dimension_mismatch"


class LengthMismatchError(EquivBeamsError):
    code = "length_mismatch"


class OutOfRangeError(EquivBeamsError):
    code = "out_of_range"


class UnboundedError(EquivBeamsError):
    """No finite spin satisfies the request (e.g. t_min at |alpha| = 1)."""

    code = "unbounded"


class ZeroIntensityError(EquivBeamsError):
    code = "zero_intensity"


class ZeroWeightError(EquivBeamsError):
    code = "zero_weight"


class SingularityError(EquivBeamsError):
    """Bloch retrieval at alpha = 0: the transferred signal vanishes."""

    code = "singularity"


class EmptyBatchError(EquivBeamsError):
    code = "empty_batch"


class DatasetError(EquivBeamsError):
    code = "dataset"
