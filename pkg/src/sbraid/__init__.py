"""Word, conjugacy and band-generator computations in the singular braid monoid SB_n."""

from .conjugacy import conjugate_p, summit_set
from .garside import delta, equal, greedy_form, normal_form, reconstruct
from .rewrite import base, enumerate_class, positively_equal
from .words import Word, degrees, parse, sigma, x

__all__ = [
    "Word", "parse", "sigma", "x", "degrees",
    "enumerate_class", "positively_equal", "base",
    "delta", "normal_form", "greedy_form", "reconstruct", "equal",
    "summit_set", "conjugate_p",
]
