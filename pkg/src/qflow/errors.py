"""Exception types shared across the package.

Every error raised by qflow on bad input or an ill-posed evaluation is one
of these, so callers (and the command line driver) can tell configuration
mistakes apart from genuine runtime failures.
"""


class QflowError(Exception):
    """Base class for all package-specific errors."""


class DegreeError(QflowError, ValueError):
    """Polynomial degree is negative or exceeds the configured cap."""


class DomainError(QflowError, ValueError):
    """Argument lies outside the mathematical domain of a function."""


class TableRangeError(QflowError, ValueError):
    """Radial coordinate falls outside a tabulated profile's range."""


class OriginError(QflowError, ValueError):
    """Evaluation requested at a point where the field is not defined
    (the coordinate origin of an azimuthal state, or z = 0 for a line
    vortex potential)."""


class SingularVelocityError(QflowError, ValueError):
    """A velocity value was required at a point flagged as singular
    (density below the node threshold)."""


class StencilNodeError(SingularVelocityError):
    """A finite-difference stencil point landed on a node.

    Carries which stencil point failed so sweeps can report it.
    """

    def __init__(self, label: str, point):
        self.label = label
        self.point = tuple(point)
        super().__init__(f"stencil point {label} at {self.point} is singular")


class BranchCutError(QflowError, ValueError):
    """A finite-difference stencil straddles the branch cut of a
    multivalued potential."""
