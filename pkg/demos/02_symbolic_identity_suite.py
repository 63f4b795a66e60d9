"""Symbolic identities of the quantized Hermitian-matrix algebra, decided
exactly through the triangular embedding.

Run:  python3 demos/02_symbolic_identity_suite.py
"""
from qrea.ncalg import (
    NCPoly,
    Z,
    central_sigma,
    cayley_hamilton_entries,
    embed_iT,
    identity_suite,
    is_zero_rea,
    leading_minor_Z,
    quantum_det_Z,
    quantum_trace_Z,
)
from qrea.scalars import qpow

# generators of the N=2 algebra and its quantum trace / determinant
z, w, v, u = (NCPoly.gen(Z(i, j)) for (i, j) in ((1, 1), (1, 2), (2, 1), (2, 2)))
print("quantum trace      :", quantum_trace_Z(2).render())
print("quantum determinant:", quantum_det_Z(2).render())

# the embedding sends Z to a product of triangular generators; the leading
# minors become products of squared diagonals
print("\nembedding of Z[1,1]:", embed_iT(NCPoly.gen(Z(1, 1)), (1, 1), 2).render())
print("embedding of Z[2,2]:", embed_iT(NCPoly.gen(Z(2, 2)), (1, 1), 2).render())
print("embedding of the 2x2 leading minor:",
      embed_iT(leading_minor_Z(2, 2), (1, 1), 2).render())

# the zero test: zw = q^2 wz holds, z w = w z does not
print("\nzw - q^2 wz == 0 :", is_zero_rea(z * w - (w * z).scale(qpow(2)), 2))
print("zw -     wz == 0 :", is_zero_rea(z * w - w * z, 2))

# central elements commute with everything; Cayley-Hamilton holds entrywise
sigma2 = central_sigma(2, 3)
print("\nsigma_2 for N=3 has", len(sigma2.terms), "terms; central:",
      all(is_zero_rea(sigma2 * NCPoly.gen(Z(i, j)) - NCPoly.gen(Z(i, j)) * sigma2, 3)
          for i in (1, 2, 3) for j in (1, 2, 3)))
ch = cayley_hamilton_entries(2)
print("Cayley-Hamilton entrywise at N=2:",
      all(is_zero_rea(p, 2) for p in ch.values()))

# the full suite, including both Laplace expansions
report = identity_suite(3)
print(f"\nidentity suite at N=3: {len(report['findings'])} findings, "
      f"pass={report['pass']}")
for f in report["findings"][:5]:
    print("   ", f["name"], "ok" if f["ok"] else "FAIL")
print("    ...")
