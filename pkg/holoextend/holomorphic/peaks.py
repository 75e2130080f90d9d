from ..errors import AnchorNotOnInnerCircle
from ..geometry.domain import UNIT_CIRCLE, Circle
from .expressions import ANCHOR_TOLERANCE, Compose, DiscPeak, HoloFunction, Moebius


def disc_peak(anchor: complex, c: Circle, n: int) -> HoloFunction:
    """Peak function of the closed disc of c: 1 at anchor, modulus < 1 elsewhere."""
    return DiscPeak(anchor, c, n)


def annulus_inner_peak(anchor: complex, r0: float, n: int) -> HoloFunction:
    """Peak function of the inner circle |z| = r0 of the annulus r0 < |z| < 1.

    q(z) = ((1 + anchor / z) / 2)^n, built as a unit-disc peak at r0 / anchor
    composed with the inversion z -> r0 / z.
    """
    if not (0 < r0 < 1):
        raise AnchorNotOnInnerCircle(f"Inner radius must lie in (0, 1), got {r0}")
    anchor = complex(anchor)
    if abs(abs(anchor) - r0) > ANCHOR_TOLERANCE:
        raise AnchorNotOnInnerCircle(f"Anchor {anchor} does not lie on |z| = {r0}")
    inversion = Moebius(0, r0, 1, 0)
    # r0 / anchor, normalized onto the unit circle
    mirrored = anchor.conjugate() / abs(anchor)
    return Compose(DiscPeak(mirrored, UNIT_CIRCLE, n), inversion)
