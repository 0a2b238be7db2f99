"""
When do the bounds become equalities?
=====================================

Complete graphs attain the Frobenius-type radius bound, and transmission
regular graphs have radius exactly 2W/n. A two-eigenvalue spectrum usually
means a complete graph, but a star at alpha = 3/(2n - 1) also has only two
distinct eigenvalues, and it attains the Frobenius bound as well.
"""

from alphaspec import all_pairs_distances, alpha_spectrum, generate_family
from alphaspec.bounds import radius_bounds
from alphaspec.closed_forms import distinct_eigenvalue_count


def frobenius_slack(g, a):
    d = all_pairs_distances(g)
    s = alpha_spectrum(d, a)
    r = next(x for x in radius_bounds(d, s) if x.bound_id == "radius_frobenius")
    return s, r


for name, n in [("complete", 5), ("cycle", 6), ("path", 5), ("star", 5)]:
    s, r = frobenius_slack(generate_family(name, n), 0.3)
    print(f"{name:8s} n={n}: radius={s.radius:.6f}  bound={r.bound_value:.6f}  slack={r.slack:.2e}  "
          f"distinct eigenvalues={distinct_eigenvalue_count(s)}")

print()
for n in range(3, 8):
    a = 3 / (2 * n - 1)
    s, r = frobenius_slack(generate_family("star", n), a)
    print(f"star n={n} alpha={a:.4f}: spectrum {s.values.round(6)}  "
          f"distinct={distinct_eigenvalue_count(s)}  Frobenius slack={r.slack:.1e}")
