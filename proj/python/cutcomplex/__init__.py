"""Total k-cut and k-cut complexes of graphs.

Facets, f-vectors, exact integer homology (Smith normal form), sequential
element matchings with acyclicity certificates, and a verification harness
for the built-in reference tables.

Family expressions: ``cycle_power(n,p)``, ``circulant(n; s1,s2,...)``,
``cartesian(complete(m), path(n))``, ``cartesian(complete(m), cycle(n))``,
``file(path)``.  Product vertex (i, j) has flat index ``i*n + j``.
"""

from ._core import (
    betti,
    check_complete_cycle,
    check_complete_path,
    check_cycle_power,
    check_cycle_power_middle,
    check_table,
    describe,
    edges,
    f_vector,
    facets,
    is_face,
    morse,
    verify,
    vertex_count,
)

__all__ = [
    "betti",
    "check_complete_cycle",
    "check_complete_path",
    "check_cycle_power",
    "check_cycle_power_middle",
    "check_table",
    "describe",
    "edges",
    "f_vector",
    "facets",
    "is_face",
    "morse",
    "verify",
    "vertex_count",
]

__version__ = "0.1.0"
