"""Gram-matrix algebra of ensembles: unitary action, tensor and Hadamard products.

Walks through the structural identities that make the Gram matrix a good
carrier of quantumness: it is a density matrix, it ignores global unitaries,
it Kroneckers under ensemble tensor products and multiplies entrywise under
the ordered Hadamard product.
"""

import numpy as np

from gramq import (
    apply_unitary,
    canonical,
    cross_gram,
    gram,
    hadamard_product,
    tensor,
)
from gramq.sampling import haar_unitary

np.set_printoptions(precision=4, suppress=True, linewidth=120)

trine = canonical("trine")
g = gram(trine)
print("trine ensemble:", trine)
print("Gram matrix (real part):")
print(g.matrix.real)
print(f"trace = {np.trace(g.matrix).real:.12f}, eigenvalues = {g.spectrum.eigenvalues}")
print(f"diagonal equals the probabilities: {np.allclose(np.diag(g.matrix), trine.probabilities)}")

print("\n--- unitary invariance ---")
rng = np.random.default_rng(0)
u = haar_unitary(2, rng)
rotated = apply_unitary(trine, u)
print("max |gram(U e) - gram(e)| =", np.abs(gram(rotated).matrix - g.matrix).max())

print("\n--- cross Gram matrix ---")
b92 = canonical("b92")
diag = canonical("diag")
print("cross_gram(e, e) == gram(e):",
      np.abs(cross_gram(trine, trine) - g.matrix).max() < 1e-14)
cg = cross_gram(trine, diag)
cg_rot = cross_gram(apply_unitary(trine, u), apply_unitary(diag, u))
print("cross Gram is invariant under a joint unitary:", np.abs(cg - cg_rot).max() < 1e-12)

print("\n--- tensor product ---")
prod = tensor(b92, trine)
print(f"b92 (x) trine has {prod.size} members in dimension {prod.dim}")
kron_gap = np.abs(gram(prod).matrix - np.kron(gram(b92).matrix, g.matrix)).max()
print("gram(e (x) f) equals kron(gram e, gram f): gap =", kron_gap)

print("\n--- ordered Hadamard product ---")
had = hadamard_product(trine, trine)
print(f"renormalization weight sum p_i q_i = {had.weight:.6f} (uniform: 1/n = 1/3)")
entrywise_gap = np.abs(
    had.weight * gram(had.ensemble).matrix - g.matrix * g.matrix
).max()
print("weight * gram(e o f) equals the entrywise product: gap =", entrywise_gap)
