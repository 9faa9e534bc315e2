"""Intersecting and linked simplices among n+3 points in R^n.

Among n+3 points in general position in R^n, a sign sweep over the
two-dimensional space of affine dependencies yields two disjoint vertex sets
whose simplices cross in their interiors (n even) or are linked (n odd).
All arithmetic is exact.
"""
from .configuration import (
    Configuration,
    GeneralPositionReport,
    build_system,
    check_general_position,
    check_general_position_by_differences,
)
from .errors import (
    CertificateError,
    GenerationError,
    InvalidWitnessError,
    NotGeneralPositionError,
    ParityError,
    TheoremViolation,
)
from .generator import GenSpec, gen_moment_curve, gen_random, moment_curve, random_configuration
from .oracle import EnumerationReport, enumerate_even, enumerate_odd, enumerate_pairs
from .sweep import (
    PartitionResult,
    compute_plane,
    find_even_partition,
    find_odd_partition,
    find_partition,
    lemma_intersection_point,
    line_normals,
    sweep,
)
from .verify import Certificate, interior_intersection, linked, pierce, verify_certificate

__version__ = "0.1.0"
