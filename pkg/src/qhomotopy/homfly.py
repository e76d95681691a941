"""Conversion between R(G) and the HOMFLYPT polynomial of the matched diagram D(G).

With v = q and t = (v^-1 - v)/z, P = R/t. A graph with m + 1 vertices gives
a diagram with m + 1 components, so P only has z-powers -m, -m+2, ..., m.
"""

from __future__ import annotations

from .polyring import HomflyPoly, HPoly, QLaurent

__all__ = ["r_to_homflypt", "homflypt_to_r", "check_homflypt_shape", "UNKNOT_DELTA"]

# v^-1 - v, the image of t*z
UNKNOT_DELTA = QLaurent.q(-1) - QLaurent.q(1)


def _check_r_shape(r: HPoly, m: int) -> None:
    if m < 0:
        raise ValueError("m must be nonnegative")
    for (_, dt, dz) in r.terms:
        if dt < 1 or dt + dz != m + 1:
            raise ValueError(
                f"monomial t^{dt} z^{dz} does not fit R(G) of a graph with {m + 1} vertices"
            )


def check_homflypt_shape(p: HomflyPoly, m: int) -> None:
    for dz in p.z_exponents():
        if (dz - m) % 2 or not (-m <= dz <= m):
            raise ValueError(f"z^{dz} cannot occur for a diagram with {m + 1} components")


def r_to_homflypt(r: HPoly, m: int) -> HomflyPoly:
    """``c(q) t^(m-i+1) z^i  ->  c(v) (v^-1 - v)^(m-i) z^(2i-m)``."""
    _check_r_shape(r, m)
    out = HomflyPoly.zero()
    for (dt, dz), c in r.coefficients().items():
        i = dz
        out = out + HomflyPoly.lift(c * UNKNOT_DELTA ** (m - i), z=2 * i - m)
    return out


def homflypt_to_r(p: HomflyPoly, m: int) -> HPoly:
    """Inverse of :func:`r_to_homflypt`; needs exact division by powers of q^-1 - q."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    check_homflypt_shape(p, m)
    coeffs = {}
    for dz in p.z_exponents():
        i = (dz + m) // 2
        a = p.coeff_z(dz)
        try:
            c = a.divexact(UNKNOT_DELTA ** (m - i))
        except ValueError:
            raise ValueError(
                f"coefficient of z^{dz} is not divisible by (q^-1 - q)^{m - i}; "
                f"not the HOMFLYPT polynomial of a matched diagram with {m + 1} components"
            ) from None
        coeffs[(m - i + 1, i)] = c
    return HPoly.from_coefficients(coeffs)
