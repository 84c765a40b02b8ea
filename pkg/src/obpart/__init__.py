"""Ordered biclique partitions of complete graphs.

Builds the explicit partition of K_{n^(2k-1)}, certifies it by brute force,
turns it into a 0/1 matrix with a large fooling set and small rank, and
searches exactly for minimum cover sizes of small complete graphs.
"""

from importlib import resources

from .construct import build_family_bicliques, build_partition, predicted_size, star_partition
from .core import Biclique, EdgeFamilyId, OrderedPartition, classify_edge, coords_of, index_of
from .matrix import BooleanMatrix, FoolingSetClaim, gap_report, partition_to_matrix, rank_exact
from .search import feasible, min_cover_size
from .verify import coverage_report, verify_family_laws, verify_ordered


def k6_fixture() -> OrderedPartition:
    """The size-four ordered biclique partition of K_6 on vertices 1..6."""
    import json

    from .cli import partition_from_json

    text = resources.files(__package__).joinpath("data/k6_fixture.json").read_text()
    return partition_from_json(json.loads(text))
