from __future__ import annotations

# ---------------------------------------------------------------------
# Float-side comparisons
# ---------------------------------------------------------------------

# Single tolerance for every float comparison (moduli, holonomies, positivity).
# Exact checks never use it.
DEFAULT_TOLERANCE = 1e-9

# Per-coefficient error bound of CycInt.to_complex (scaled by sum |coeffs|)
TO_COMPLEX_ERROR_PER_UNIT = 1e-14

# ---------------------------------------------------------------------
# Output formats
# ---------------------------------------------------------------------

JSON_FLOAT_DECIMALS = 12
JSON_INDENT = 2

OUTPUT_FORMATS = ("text", "json", "svg")
SVG_COMMANDS = ("flower", "branes")
COMMANDS = ("flower", "branes", "verify", "potential", "chart")

# ---------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------

SVG_VIEWBOX = 600          # points; figure is SVG_VIEWBOX / 72 inches at 72 dpi
SVG_HASHSALT = "grassmannian-mirror"
SVG_POINT_RADIUS = 0.035   # in units of the normalised max modulus
SVG_RING_STEP = 0.03

# ---------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILED = 2

# ---------------------------------------------------------------------
# Exhaustive sweep bounds (deep mode; dev mode clamps them)
# ---------------------------------------------------------------------

MAX_EXHAUSTIVE_CELLS = 12      # k(n-k) bound for exhaustive three-route Schur checks
MAX_EIGEN_DIMENSION = 300      # C(n,k) bound for the eigenvector sweep
MAX_PULLBACK_CELLS = 20        # k(n-k) bound for the pullback identity
RANDOM_SCHUR_CASES = 200
MAX_RANDOM_CELLS = 12          # also capped by MAX_EXHAUSTIVE_CELLS
RANDOM_SEED = 20240611

# Exhaustive Lam-Leung subset check bound (2^p subsets)
MAX_VANISHING_SUBSUM_PRIME = 13
