"""Successive minima of ideal lattices and the certified inequalities.

Reproduces the Z[i] anchors: lambda_1 = lambda_2 = 1 for the ring of
integers, the exact equality lambda_2((1+i)^2) = lambda_1(1+i) *
lambda_2(1+i) = 2, and the discriminant bounds.
"""

from normbasis import (catalog_field, check_corollary_bounds,
                       check_product_inequality, compute_embeddings,
                       principal_ideal, ring_of_integers, successive_minima)
from normbasis.ideals import ideal_norm

field = catalog_field("quadratic", -1)
es = compute_embeddings(field)

print("=== Z[i]: ring of integers ===")
res = successive_minima(field, es, ring_of_integers(field))
for i, lam in enumerate(res.lambdas, 1):
    print(f"  lambda_{i} in [{float(lam.lo):.12f}, {float(lam.hi):.12f}]")
print(f"  witnesses (power basis): {[w.coords for w in res.witnesses]}")

print("\n=== principal ideal (1 + i) ===")
p = principal_ideal(field, field.element([1, 1]))
print(f"  norm: {ideal_norm(field, p)}")
res = successive_minima(field, es, p)
for i, lam in enumerate(res.lambdas, 1):
    print(f"  lambda_{i} ~ {float(lam.mid):.12f}")

print("\n=== product inequality: lambda_2(I J) <= lambda_1(I) lambda_2(J) ===")
rep = check_product_inequality(field, es, p, p, 1, 2)
print(f"  lambda_2((1+i)^2) ~ {float(rep.lam_n_ij.mid):.9f}"
      f" <= {float((rep.lam_k_i * rep.lam_l_j).mid):.9f}: "
      f"{'PASS' if rep.passed else 'FAIL'} (equality case)")

print("\n=== discriminant bounds for O_K ===")
rep = check_corollary_bounds(field, es, ring_of_integers(field))
print(f"  lambda_n^n <= (2/pi)^(2 r2) |D| N(I) ~ {float(rep.supnorm_rhs.mid):.4f}: "
      f"{'PASS' if rep.supnorm_pass else 'FAIL'}")
print(f"  prod lambda_i <= (2/pi)^r2 sqrt|D| N(I) ~ {float(rep.minkowski_rhs.mid):.4f}: "
      f"{'PASS' if rep.minkowski_pass else 'FAIL'}")
