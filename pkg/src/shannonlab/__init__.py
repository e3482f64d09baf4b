"""Reconstruction of bandlimited functions from equispaced samples.

shannonlab evaluates truncated Shannon sampling sums, frequency-window
regularized partial sums and localized time-window regularized formulas,
and checks their measured errors against closed-form bounds.
"""

__version__ = "0.1.0"
