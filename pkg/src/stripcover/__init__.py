"""Exact tools for maximizing barrier-coverage lifetime on the unit segment."""

from .core import (
    Instance,
    RadialAssignment,
    Rect,
    Schedule,
    as_rational,
    coverage_gaps_at,
    evaluate_lifetime,
    format_instance,
    format_schedule,
    max_lifetime_bound,
    parse_instance,
    parse_schedule,
    sensor_rect,
)
from .roundrobin import RoundRobinResult, round_robin, rr_prime, solo_radius
from .radsc import (
    InfeasibleInstanceError,
    RadscSolution,
    candidate_lifetimes,
    is_feasible,
    make_proper,
    solve,
)
from .dutycycle import (
    DutyCycleResult,
    ShiftPartition,
    best_partition,
    evaluate_partition,
    shift_lifetime,
)
from .analysis import (
    Strip,
    UnitInstance,
    analyze_schedule,
    compute_delta,
    cut_into_strips,
    integerize_strip,
    prune_strip,
    stretch_instance,
    strip_rr,
    unit_battery_reduction,
    unit_opt,
)
from .reductions import PartitionInput, certificate_to_schedule, partition_to_instance

__version__ = "0.1.0"
