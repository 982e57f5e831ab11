"""C-finite certificates: an identity holds for all n once its difference vanishes on 0..B.

Both sides are rebuilt as recurrences from the Fibonacci and Lucas recurrences
with the closure operations of ``CFiniteSpec`` (shift, constant multiples,
geometric weights, partial sums and sign alternation). Their difference obeys a
recurrence of some order d, so d consecutive zero terms force it to vanish.
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

from modules.core.services.errors import CertificateRefusedError, InternalInconsistencyError
from modules.core.services.settings import get_settings
from modules.sequences import FIBONACCI, LUCAS, CFiniteSpec

from .catalog import IdentityEntry, get_identity
from .models import Certificate, IdentityId

logger = logging.getLogger(__name__)


def cfinite_sides(entry: IdentityEntry, m: int) -> Tuple[CFiniteSpec, CFiniteSpec]:
    """Recurrences for n -> LHS(n) and n -> RHS(n)."""

    next_fib = FIBONACCI.shift(1)
    identity = entry.id
    if identity is IdentityId.SURY:
        return LUCAS.geometric(2).partial_sums(), next_fib.geometric(2).scale(2)
    if identity is IdentityId.THEOREM2:
        return (LUCAS + next_fib).geometric(3).partial_sums(), next_fib.geometric(3).scale(3)
    if identity is IdentityId.GENERAL:
        summand = LUCAS + next_fib.scale(m - 2)
        return summand.geometric(m).partial_sums(), next_fib.geometric(m).scale(m)
    if identity is IdentityId.ALTERNATING:
        summand = LUCAS.shift(1) + FIBONACCI.scale(m - 2)
        return summand.geometric(-1).geometric_convolution(m), next_fib.geometric(-1)
    if identity is IdentityId.COROLLARY:
        return LUCAS.shift(1).geometric(-1).geometric_convolution(2), next_fib.geometric(-1)
    raise InternalInconsistencyError(f"no recurrence model for {identity.value}")


def certify_cfinite(
    identity: IdentityId | str,
    m: Optional[int] = None,
    rhs_override: Optional[CFiniteSpec] = None,
    *,
    static_bound: Optional[int] = None,
) -> Certificate:
    """Certify an identity for every n, or refuse with the first nonzero difference.

    ``rhs_override`` replaces the right-hand side by another recurrence, which is
    how perturbed statements are shown to be rejected.
    """

    entry = get_identity(identity)
    m = entry.resolve_m(m)
    lhs_spec, rhs_spec = cfinite_sides(entry, m)
    count_check = rhs_override is None
    if rhs_override is not None:
        rhs_spec = rhs_override
    difference = lhs_spec - rhs_spec
    if static_bound is None:
        static_bound = get_settings().certificate_order_bound
    bound = max(static_bound, difference.order)

    lhs_terms = lhs_spec.terms(bound + 1)
    for n, value in enumerate(lhs_terms):
        if value != entry.lhs(n, m):
            raise InternalInconsistencyError(
                f"recurrence for the {entry.id.value} left-hand side drifts at n = {n}"
            )
    if count_check:
        for n, value in enumerate(rhs_spec.terms(bound + 1)):
            if value != entry.rhs(n, m):
                raise InternalInconsistencyError(
                    f"recurrence for the {entry.id.value} right-hand side drifts at n = {n}"
                )

    differences = tuple(difference.terms(bound + 1))
    for n, value in enumerate(differences):
        if value:
            logger.warning("Certificate for %s (m=%d) refused: difference %d at n=%d", entry.id.value, m, value, n)
            raise CertificateRefusedError(entry.id.value, n, value)

    logger.info(
        "Certified %s for m=%d: closure order %d, checked n=0..%d",
        entry.id.value,
        m,
        difference.order,
        bound,
    )
    return Certificate(
        identity=entry.id,
        m=m,
        static_bound=static_bound,
        closure_order=difference.order,
        characteristic_polynomial=tuple(difference.characteristic_polynomial()),
        differences=differences,
    )


__all__ = ["cfinite_sides", "certify_cfinite"]
