"""Exact power series: closed-form generating functions and f = g / (1 - g)."""

from htdet.hessenberg import det_prefixes
from htdet.sequences import large_schroeder
from htdet.series import GF_IDS, PowerSeries, f_from_g, g_series, gf_catalog, ps_sqrt

r = ps_sqrt(PowerSeries([1, -6, 1], 8))
print("sqrt(1 - 6x + x^2) =", r)
print("squared back:       ", r * r)

for gf in GF_IDS:
    print(f"{gf:>15}:", gf_catalog(gf, 10).integer_coeffs())

# The determinant sequence of a Hessenberg-Toeplitz family is read off
# the coefficients of g/(1-g).
a = [large_schroeder(i) for i in range(1, 11)]
f = f_from_g(g_series(1, a))
print("\ncoefficients of g/(1-g):", f.integer_coeffs()[1:])
print("determinants:           ", det_prefixes(1, a))
print("as JSON:", gf_catalog("Fine", 6).to_json())
