import threading
from typing import Any, Dict, List, Optional

from ..logging_config import get_logger

logger = get_logger(__name__)


class SolverMonitor:
    """Collect rounds, exponents and timings of peak-system solves."""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self) -> None:
        with self._lock:
            self.metrics: Dict[str, Dict[str, Any]] = {}

    def record_solve(self, solver: str, rounds: int, max_exponent: int, elapsed: float) -> None:
        """Record a successful solve."""
        with self._lock:
            metrics = self.metrics.setdefault(solver, {"solves": 0, "total_rounds": 0, "max_rounds": 0, "max_exponent": 0, "total_time": 0.0, "failures": 0})
            metrics["solves"] += 1
            metrics["total_rounds"] += rounds
            metrics["max_rounds"] = max(metrics["max_rounds"], rounds)
            metrics["max_exponent"] = max(metrics["max_exponent"], max_exponent)
            metrics["total_time"] += elapsed

    def record_failure(self, solver: str) -> None:
        with self._lock:
            metrics = self.metrics.setdefault(solver, {"solves": 0, "total_rounds": 0, "max_rounds": 0, "max_exponent": 0, "total_time": 0.0, "failures": 0})
            metrics["failures"] += 1

    def get_stats(self, include_time: bool = False) -> Dict[str, Dict[str, Any]]:
        """Per-solver statistics; timings are left out unless requested."""
        with self._lock:
            stats = {}
            for solver, metrics in sorted(self.metrics.items()):
                entry = {key: value for key, value in metrics.items() if include_time or key != "total_time"}
                stats[solver] = entry
            return stats

    def totals(self) -> Dict[str, int]:
        with self._lock:
            values: List[Dict[str, Any]] = list(self.metrics.values())
        return {
            "solves": sum(m["solves"] for m in values),
            "total_rounds": sum(m["total_rounds"] for m in values),
            "max_rounds": max((m["max_rounds"] for m in values), default=0),
        }

    def generate_report(self) -> str:
        lines = ["=== Solver Report ==="]
        for solver, stats in self.get_stats(include_time=True).items():
            lines.append(f"{solver}: {stats['solves']} solves, {stats['total_rounds']} rounds (max {stats['max_rounds']}), max exponent {stats['max_exponent']}, {stats['total_time']:.3f}s, {stats['failures']} failures")
        return "\n".join(lines)


# Global monitor instance
_solver_monitor: Optional[SolverMonitor] = None


def get_solver_monitor() -> SolverMonitor:
    """Get the global solver monitor instance."""
    global _solver_monitor
    if _solver_monitor is None:
        _solver_monitor = SolverMonitor()
    return _solver_monitor
