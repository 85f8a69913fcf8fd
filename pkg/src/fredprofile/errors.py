"""Exception types shared across the package."""


class FredprofileError(Exception):
    """Base class for all library errors."""


class AmbientMismatch(FredprofileError):
    """Two objects live in rational spaces of different dimensions."""


class NotContained(FredprofileError):
    """quotient_dim was asked for V/W with W not a subspace of V."""


class NotInvariant(FredprofileError):
    """restrict was asked to restrict a matrix to a non-invariant subspace."""


class NotPseudoFredholm(FredprofileError):
    """The operator has no generalized Kato decomposition at this point.

    Raised by canonical_gkd and alpha_beta_pq when some atom's profile
    flags the point (rational unit-circle points of the plain shifts).
    """


class UnsupportedPoint(FredprofileError):
    """A requested evaluation point is outside an atom's closed-form table.

    Unreachable with the current atom vocabulary, which admits every exact
    rational pair; kept because the CLI contract reserves an exit code for it.
    """


class DocumentError(FredprofileError):
    """An operator document failed to parse or validate."""
