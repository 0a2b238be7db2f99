"""
Stars: closed forms against the eigensolver
===========================================

The star S_n has an explicit alpha-distance spectrum. Here we compare it
with the numeric spectrum and watch the energy change slope where the
leaf eigenvalue crosses the spectral mean.
"""

import numpy as np

from alphaspec import all_pairs_distances, alpha_energy, alpha_spectrum, generate_family
from alphaspec.closed_forms import star_energy, star_spectrum

# numeric and closed-form spectra of S_6 at alpha = 0.3
d = all_pairs_distances(generate_family("star", 6))
numeric = alpha_spectrum(d, 0.3).values
exact = star_spectrum(6, 0.3).expanded()
print("numeric :", np.round(numeric, 10))
print("closed  :", np.round(exact, 10))
print("max deviation:", np.abs(numeric - exact).max())

# energy along alpha; the leaf term changes sign at alpha = 2n/(3n - 2)
n = 10
kink = 2 * n / (3 * n - 2)
print(f"\nS_{n}: leaf eigenvalue meets the mean at alpha = {kink:.6f}")
d = all_pairs_distances(generate_family("star", n))
for a in np.linspace(0, 1, 11):
    e_num = alpha_energy(alpha_spectrum(d, a))
    print(f"alpha={a:4.2f}  energy={e_num:10.6f}  closed form={star_energy(n, a):10.6f}")
