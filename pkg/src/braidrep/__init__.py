"""braidrep: exact construction, verification and classification of
low-dimensional braid group B3 representations over cyclotomic fields."""

from .field import (
    CycloElement,
    Rational,
    complex_enclosure,
    cyclo_new,
    cyclo_op,
    embed_lift,
    from_rational,
    root_of_unity,
)

__all__ = [
    "CycloElement",
    "Rational",
    "complex_enclosure",
    "cyclo_new",
    "cyclo_op",
    "embed_lift",
    "from_rational",
    "root_of_unity",
]

__version__ = "0.1.0"
