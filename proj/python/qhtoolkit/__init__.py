"""Exact quantum cohomology, Novikov arithmetic, filtered complexes and Gelfand-Cetlin polytopes."""

import json
from fractions import Fraction

from . import _qht
from ._qht import QhtError, catalog, extension_suite, flag_dim

__all__ = [
    "QhtError",
    "catalog",
    "run",
    "ring",
    "decompose",
    "qmul",
    "valuation",
    "rho",
    "random_complex",
    "extension_suite",
    "flag_dim",
    "monotone_lambda",
    "classify",
    "vertices",
    "acceptance",
]


def _strs(values):
    return None if values is None else [str(Fraction(v)) for v in values]


def run(*args):
    """Runs a command line such as run("ring", "decompose", "cp2_novikov") and returns the result dict."""
    return json.loads(_qht.run([str(a) for a in args]))


def ring(ref, m=12):
    return json.loads(_qht.ring(ref, m))


def decompose(ref, generator=None, m=12):
    return json.loads(_qht.decompose(ref, generator, m))


def qmul(ref, x, y, m=12):
    return _qht.qmul(ref, x, y, m)


def valuation(ref, x, m=12):
    return Fraction(_qht.valuation(ref, x, m))


def rho(complex, cls):
    """Spectral invariant of a cycle; `complex` is a dict or JSON text, `cls` an expression or component list."""
    text = complex if isinstance(complex, str) else json.dumps(complex)
    chain = cls if isinstance(cls, str) else json.dumps(cls)
    return Fraction(_qht.rho(text, chain))


def random_complex(seed, bound=8):
    return json.loads(_qht.random_complex(seed, bound))


def monotone_lambda(flag, m=None):
    return [Fraction(x) for x in _qht.monotone_lambda(flag, None if m is None else str(Fraction(m)))]


def classify(flag, u, lambda_=None):
    kind, inequalities = _qht.classify(flag, _strs(u), _strs(lambda_))
    return kind, inequalities


def vertices(flag, lambda_=None):
    return [tuple(Fraction(x) for x in v) for v in _qht.vertices(flag, _strs(lambda_))]


def acceptance():
    return _qht.acceptance()
