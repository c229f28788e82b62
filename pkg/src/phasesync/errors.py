"""Exception and warning types shared across the package."""


class InvalidBandError(ValueError):
    """Frequency band edges are out of range or reversed."""


class SignalTooShortError(ValueError):
    """Signal has too few samples for the requested filter order."""


class AllSamplesMaskedError(ValueError):
    """Every sample of some signal/trial fell below the amplitude floor."""


class FactorTooLargeError(ValueError):
    """Downsampling factor would leave fewer than two samples."""


class EmptyEffectiveWindowError(ValueError):
    """All samples are masked for at least one signal pair."""


class WindowTooLongError(ValueError):
    """Welch window exceeds the number of samples per trial."""


class EmptyBandError(ValueError):
    """Frequency band contains no spectral bins."""


class ShapeError(ValueError):
    """Array has the wrong number of dimensions or axis sizes."""


class FormatError(ValueError):
    """On-disk bundle is malformed (header/payload mismatch)."""


class DivergenceError(RuntimeError):
    """Numerical integration produced non-finite state."""


class CalibrationFailureError(RuntimeError):
    """Simulated oscillator spectral peak landed outside tolerance."""


class OutputMismatchError(RuntimeError):
    """Benchmark implementations disagree beyond tolerance."""


class OrderTooSmallWarning(UserWarning):
    """Filter order is small for the requested transition width."""


class AliasingWarning(UserWarning):
    """Signal carries power above the post-decimation Nyquist frequency."""
