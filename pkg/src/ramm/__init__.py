"""Batch task-mapping heuristics for heterogeneous resources.

Resource Aware Min-Min alongside Min-Min, Max-Min and Improved Max-Min,
an exhaustive optimal-makespan oracle, schedule metrics and reporting.
"""

from .etc import RoundingMode, completion_matrix, completion_time, derive_etc
from .metrics import ScheduleMetrics, compute_metrics
from .model import (Assignment, Diagnostic, EtcMatrix, InvalidResourceError,
                    MalformedOrderError, ReadyTimes, ResourceSpec, Schedule, TaskSpec,
                    build_schedule, validate_schedule)
from .oracle import InstanceTooLargeError, OracleResult, optimal_makespan
from .policies import (DivertVariant, PolicyId, improved_max_min, max_min, min_min, ramm,
                       run_policy)

__all__ = [
    "Assignment", "Diagnostic", "DivertVariant", "EtcMatrix", "InstanceTooLargeError",
    "InvalidResourceError", "MalformedOrderError", "OracleResult", "PolicyId", "ReadyTimes",
    "ResourceSpec", "RoundingMode", "Schedule", "ScheduleMetrics", "TaskSpec",
    "build_schedule", "completion_matrix", "completion_time", "compute_metrics",
    "derive_etc", "improved_max_min", "max_min", "min_min", "optimal_makespan", "ramm",
    "run_policy", "validate_schedule",
]
