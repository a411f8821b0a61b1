from .io import FormatError, format_instance, parse_instance, parse_schedule, read_instance, write_instance
from .oracle import MAX_ORACLE_JOBS, OracleResult, oracle_optimal
from .tanaka import adapt_tanaka, metric_setup_matrix, random_pairs, read_pairs

__all__ = [
    "FormatError", "format_instance", "parse_instance", "parse_schedule", "read_instance",
    "write_instance", "MAX_ORACLE_JOBS", "OracleResult", "oracle_optimal", "adapt_tanaka",
    "metric_setup_matrix", "random_pairs", "read_pairs",
]
