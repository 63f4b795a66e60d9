"""Exact braid machinery: the braid operator, its relations, exterior
powers, and the braiding of minor blocks.

Run:  python3 demos/01_exact_braid_identities.py
"""
from qrea.braid import QMat, build_rhat, exterior_power, minor_braiding, minor_braiding_entry
from qrea.scalars import qpow

N = 3
R, Rinv = build_rhat(N)
print(f"braid operator for N={N}: {R.rows}x{R.cols}, {len(R.entries)} nonzero entries")

I = QMat.eye(N)
R12, R23 = R.kron(I), I.kron(R)
print("braid relation  R12 R23 R12 == R23 R12 R23 :",
      R12 @ R23 @ R12 == R23 @ R12 @ R23)

I2 = QMat.eye(N * N)
hecke = (R - I2.scale(qpow(-1))) @ (R + I2.scale(qpow(1)))
print("Hecke relation  (R - q^-1)(R + q) == 0     :", hecke.is_zero())
print("explicit inverse R R^-1 == 1               :", (R @ Rinv) == I2)

# the deformed operator stays invertible for any sign pattern
Re, Reinv = build_rhat(3, eps=(1, -1, 0))
print("deformed braid operator invertible         :", (Re @ Reinv) == QMat.eye(9))

# q-exterior powers: wedge vectors embedded in the tensor power
ext = exterior_power(N, 2)
print(f"\nexterior square of C^{N}: dimension {ext.dim}, basis {ext.basis}")
print("project . embed == identity                :", ext.project @ ext.embed == QMat.eye(ext.dim))

# braiding of minor blocks: diagonal entries are q^{-|I cap I'|}
B, Binv = minor_braiding(N, 2, 2)
ek = exterior_power(N, 2)
for I_ in ek.basis[:2]:
    for Ip in ek.basis[:2]:
        val = minor_braiding_entry(B, ek, ek, I_, I_, Ip, Ip)
        print(f"minor braiding diagonal ({I_},{Ip}): {val.render()}"
              f"   expected q^-{len(set(I_) & set(Ip))}")
