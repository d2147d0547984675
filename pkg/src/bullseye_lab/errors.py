"""Exception and warning types shared across the toolkit."""


class BullseyeError(Exception):
    """Base class for all toolkit errors."""


# --- geometry / materials ---

class InvalidGeometry(BullseyeError):
    pass


class FeatureUnderresolved(BullseyeError):
    pass


class OutOfDispersionRange(BullseyeError):
    pass


# --- solver ---

class NumericalBlowup(BullseyeError):
    """Field magnitude exceeded the runaway guard (Courant violation)."""


class NoResonance(BullseyeError):
    pass


class DegenerateField(BullseyeError):
    pass


class PlaneInsidePML(BullseyeError):
    pass


# --- photon simulation ---

class ConfigError(BullseyeError):
    pass


class EmptyStream(BullseyeError):
    pass


class InsufficientWindow(BullseyeError):
    pass


# --- fitting / analysis ---

class NoConvergence(BullseyeError):
    """Fit failed to converge; carries the best parameters seen so far."""

    def __init__(self, message, best_params=None, best_cost=None):
        super().__init__(message)
        self.best_params = best_params
        self.best_cost = best_cost


class SingularNormalMatrix(BullseyeError):
    pass


class DegenerateData(BullseyeError):
    pass


class WindowOutOfRange(BullseyeError):
    pass


class ZeroTotalRate(BullseyeError):
    pass


class InvalidR(BullseyeError):
    pass


class NonSaturatingData(BullseyeError):
    pass


class EmptyGroup(BullseyeError):
    pass


# --- cli / io ---

class ConfigInvalid(BullseyeError):
    """Configuration failed schema validation; message carries the schema path."""


class IoFailure(BullseyeError):
    pass


# --- warnings ---

class IdentifiabilityWarning(UserWarning):
    """Fitted time constants too close together to separate reliably."""


class StabilityWarning(UserWarning):
    """Solver configuration exceeds the documented stability bound."""
