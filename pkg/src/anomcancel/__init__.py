"""Find, verify and catalog anomalous cancellations such as 16/64 = 1/4."""

__version__ = "0.1.0"

from .digits import decompose, digit_at, digit_count, remove_digit  # noqa: E402
from .diophantine import extended_gcd, solve_linear, enumerate_box  # noqa: E402
from .records import CancellationRecord, RecordFilter, classify, verify_cancellation  # noqa: E402
from .solver import (  # noqa: E402
    CancellationQuery,
    Finite,
    InfiniteFamily,
    build_equation,
    solve,
    solve_fixed_denominator,
)
