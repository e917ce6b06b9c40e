from .enumeration import bell_number, enumerate_partitions, rgs_prefixes, stirling2
from .model import Partition, ProductPartition, concatenate, format_partition_text, parse_partition_text

__all__ = [
    "Partition",
    "ProductPartition",
    "concatenate",
    "parse_partition_text",
    "format_partition_text",
    "enumerate_partitions",
    "rgs_prefixes",
    "bell_number",
    "stirling2",
]
