"""Exact flow modules, obstructions and Kirchhoff laws on graph representations.

Every command takes JSON documents (as dicts or JSON text) in the same formats
as the ``flownet`` command-line tool and returns its report as a dict; the
report's ``exit_code`` follows the CLI convention (0 ok, 1 computation
failure, 2 input error).
"""

import json

from . import _core

__all__ = ["basis", "obstruction", "check", "solve2", "oracle", "cover", "colim", "rank", "kernel", "smith_diagonal"]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _report(pair):
    text, _ = pair
    return json.loads(text)


def basis(network, ring=None, external=None):
    return _report(_core.basis(_text(network), ring, None if external is None else set(external)))


def obstruction(network, ring=None):
    return _report(_core.obstruction(_text(network), ring))


def check(network, chain, ring=None):
    return _report(_core.check(_text(network), _text(chain), ring))


def solve2(network, gram, potential):
    return _report(_core.solve2(_text(network), _text(gram), _text(potential)))


def oracle(network=None, ring=None, seed=0, count=0):
    return _report(_core.oracle(None if network is None else _text(network), ring, seed, count))


def cover(network, covering):
    return _report(_core.cover(_text(network), _text(covering)))


def colim(category, functor, degree=0, ring=None):
    return _report(_core.colim(_text(category), _text(functor), degree, ring))


def rank(matrix):
    return _core.rank(_text(matrix))


def kernel(matrix):
    return json.loads(_core.kernel(_text(matrix)))


def smith_diagonal(matrix):
    return [int(x) for x in _core.smith_diagonal(_text(matrix))]
