"""Schur multiple zeta values: exact truncations, constants, QSym antipode, duality.

Tableaux are lists of rows, with None for cells of the inner shape:
[[None, 1, 2], [None, 1], [2, 2]].
"""

import json
from fractions import Fraction

from . import _smz

__all__ = ["smzv", "smzv_float", "constant", "antipode", "dual", "jacobi_trudi", "check_duality"]


def _rows(t):
    return json.dumps(t)


def smzv(tableau, N):
    """Truncated sum over SSYT with entries <= N, as a Fraction."""
    return Fraction(_smz.smzv_exact(_rows(tableau), N))


def smzv_float(tableau, N):
    return _smz.smzv_float(_rows(tableau), N)


def constant(shape, s):
    """Value at the constant even argument s as (coefficient, power of pi)."""
    coeff, power = _smz.constant(list(shape), s)
    return Fraction(coeff), power


def antipode(expr):
    """Antipode of a QSym element written like "M[2,1] - 2 E[3]"; result in the M basis."""
    return _smz.antipode(expr)


def dual(tableau):
    """Rows of the dual ribbon tableau, or None when the dual is not a ribbon."""
    d = _smz.dual(_rows(tableau))
    return None if d is None else json.loads(d)["rows"]


def jacobi_trudi(shape, diag, N, kind="H"):
    return json.loads(_smz.jacobi_trudi(list(shape), {int(k): v for k, v in diag.items()}, N, kind))


def _side(x):
    if isinstance(x, dict):
        return json.dumps({"terms": [{"coeff": c, "tableau": t} for c, t in x["terms"]]})
    return _rows(x)


def check_duality(lhs, rhs, tol=1e-4, n_cap=1_000_000):
    """A side is a tableau or {"terms": [(coeff, tableau), ...]}."""
    return json.loads(_smz.check_duality(_side(lhs), _side(rhs), tol, n_cap))
