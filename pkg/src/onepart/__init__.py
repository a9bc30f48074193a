"""Exact one-part double Hurwitz numbers and the intersection numbers tied to them."""
from .exact import Rational, bernoulli_number, bernoulli_plus, bernoulli_poly, faulhaber, fmt
from .partitions import Partition, aut_order, all_partitions
from .series import Series1, SeriesN, invert, s_kernel

__version__ = "0.1.0"
