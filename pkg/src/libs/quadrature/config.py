"""
Quadrature defaults.

The integrand |f - G|^p is only non-smooth at cusp locations, so every
cusp becomes a panel breakpoint and each smooth panel gets a high-order
Gauss-Legendre rule. These values are also the experiment defaults.
"""

# Gauss-Legendre order used on every panel
DEFAULT_ORDER_PER_PANEL = 256

# Newton refinement of the Legendre roots
NEWTON_TOLERANCE = 1e-15
NEWTON_MAX_ITERATIONS = 100

# Geometric grading toward cusp points: levels per side and shrink ratio
DEFAULT_GRADING_LEVELS = 10
DEFAULT_GRADING_RATIO = 0.2
