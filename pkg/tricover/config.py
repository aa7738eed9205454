SCHEMA_VERSION = 1

THREADS_ENV_VAR = "TRICOVER_THREADS"
DEFAULT_THREADS = 1

DEFAULT_SAMPLE_DENOMINATOR = 100

TRIANGLE_KEYS = ("base_y", "base_x_left", "base_len", "apex_x", "apex_y")

SVG_SCALE = 60.0
SVG_MARGIN = 20.0
SVG_STROKE_WIDTH = 1.0
SVG_ROLE_FILL = {
    "target": "none",
    "grid-part": "url(#dots)",
    "interleave-part": "white",
    "final-pieces": "url(#rhombi)",
    "piece": "white",
}
