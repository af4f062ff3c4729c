"""Round-robin scheduling: every sensor takes a turn covering [0, 1] alone.

Sensor i needs radius max(x_i, 1 - x_i) to reach both endpoints by itself,
so its turn lasts b_i / max(x_i, 1 - x_i).  The weighted-harmonic quantity
`rr_prime` is a closed-form lower bound on the round-robin lifetime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ZERO, Instance, Schedule, as_rational


def solo_radius(x) -> Fraction:
    """Radius a sensor at x needs to cover [0, 1] on its own: max(x, 1 - x).

    Valid for any rational location, including points outside [0, 1].
    """
    x = as_rational(x)
    return max(x, 1 - x)


def rr_prime_values(locations: Sequence, batteries: Sequence) -> Fraction:
    """B^2 / sum(b_i * r_i): the battery-weighted harmonic lower bound.

    Equals B / r_bar where r_bar is the solo radius averaged with weights
    b_i / B.  By the Cauchy-Schwarz inequality this never exceeds the
    round-robin lifetime sum(b_i / r_i), with equality exactly when all
    contributing r_i coincide.
    """
    locations = [as_rational(x) for x in locations]
    batteries = [as_rational(b) for b in batteries]
    total = sum(batteries, ZERO)
    if total <= 0:
        raise ValueError("total battery is zero; the lower bound is undefined")
    weighted = sum((b * solo_radius(x) for x, b in zip(locations, batteries)), ZERO)
    return total * total / weighted


def rr_prime(inst: Instance) -> Fraction:
    return rr_prime_values(inst.locations, inst.batteries)


@dataclass(frozen=True)
class RoundRobinResult:
    schedule: Schedule
    lifetime: Fraction
    rr_prime: Fraction
    per_sensor_radii: tuple[Fraction, ...]


def round_robin(inst: Instance, order: Sequence[int] | None = None) -> RoundRobinResult:
    """Schedule the sensors one after another, each covering [0, 1] alone.

    Sensors with zero battery are skipped (radius 0); they would contribute a
    zero-length turn anyway.  `order` permutes the rotation; the lifetime is
    order-independent, so the parameter exists for tests only.
    """
    n = inst.n
    if order is None:
        order = range(n)
    else:
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of all sensor indices")
    radii = [ZERO] * n
    activations = [ZERO] * n
    clock = ZERO
    for i in order:
        b = inst.batteries[i]
        activations[i] = clock
        if b == 0:
            continue
        r = solo_radius(inst.locations[i])
        radii[i] = r
        clock += b / r
    total = inst.total_battery
    lower = rr_prime(inst) if total > 0 else ZERO
    solos = tuple(solo_radius(x) for x in inst.locations)
    return RoundRobinResult(Schedule(radii, activations), clock, lower, solos)
