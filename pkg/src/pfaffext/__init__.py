"""Ext modules, regularity and cohomology of GL-invariant ideals in the
coordinate ring of skew-symmetric matrices."""

from .decomposition import ExtDecomposition, parse_window
from .ideals import IdealSpec, normalize, parse_ideal, z_set
from .partitions import Partition

__version__ = "0.1.0"

__all__ = ["ExtDecomposition", "IdealSpec", "Partition", "normalize",
           "parse_ideal", "parse_window", "z_set"]
