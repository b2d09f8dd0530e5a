"""Zeros of derivatives of ultraspherical Bessel functions x^{-delta} J_nu, x^{-delta} Y_nu.

Subpackages:

* ``specfun``: double-precision Bessel, Airy and uniform-asymptotic evaluators;
* ``mcmahon``: exact derivation of the asymptotic zero expansion;
* ``zeros``: refined zeros, zero counting, a high-precision oracle and
  convergence studies.

``phase`` holds the oscillation-phase function and bracket construction.
"""

__version__ = "0.1.0"
