"""Exception hierarchy.

Every domain error carries a stable machine-readable ``code`` so the CLI can
emit ``{"error": code, "detail": ...}`` objects without string matching.
"""


class QRootsError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


# quiver construction / structure

class CyclicQuiverError(QRootsError):
    code = "cyclic_quiver"


class BadLabelError(QRootsError):
    code = "bad_label"


class LoopError(QRootsError):
    code = "loop"


class EmptySubsetError(QRootsError):
    code = "empty_subset"


class NotSinkOrSourceError(QRootsError):
    code = "not_sink_or_source"


class NotSymmetricError(QRootsError):
    code = "not_symmetric"


# dimension vectors and roots

class ZeroVectorError(QRootsError):
    code = "zero_vector"


class NotARootError(QRootsError):
    code = "not_a_root"


class NotPositiveError(QRootsError):
    code = "not_positive"


class NegativeEntryError(QRootsError):
    code = "negative_entry"


# generic hom/ext

class CapExceededError(QRootsError):
    code = "cap_exceeded"


# canonical decomposition

class NotOrthogonalPairError(QRootsError):
    code = "not_orthogonal_pair"


class IterationCapExceededError(QRootsError):
    code = "iteration_cap_exceeded"


class NoRefinementFoundError(QRootsError):
    code = "no_refinement_found"


# accumulation geometry

class DynkinInputError(QRootsError):
    code = "dynkin_input"


class NoConvergenceError(QRootsError):
    code = "no_convergence"


class NotRealSchurError(QRootsError):
    code = "not_real_schur"


class NotIsotropicSchurError(QRootsError):
    code = "not_isotropic_schur"


class PreconditionFailedError(QRootsError):
    code = "precondition_failed"


class NotOnQuadricError(QRootsError):
    code = "not_on_quadric"
