"""
Rotated filter banks and orientation pooling
============================================

One canonical filter is resampled at R angles. Rotating the input by a
quarter turn moves every response to the matching orientation channel, so
the pooled vector field turns with the image.
"""

import numpy as np

from roteqnet import layers as L
from roteqnet.rotation import OrientationSet, apply_circular_mask, rot90_field, rotate_scalar_filter

gen = np.random.default_rng(0)

# A smooth 9x9 filter, masked to its inscribed disc
i, j = np.mgrid[0:9, 0:9] - 4.0
w = apply_circular_mask(np.exp(-(i ** 2 + (j - 2) ** 2) / 6) - np.exp(-(i ** 2 + (j + 2) ** 2) / 6))

# Quarter turns are index permutations, other angles interpolate
for angle in (90, 180, 30):
    r = rotate_scalar_filter(w, angle)
    exact = np.array_equal(r, np.rot90(w, angle // 90)) if angle % 90 == 0 else None
    print(f"rotate by {angle:>3}: norm ratio {np.linalg.norm(r) / np.linalg.norm(w):.4f}"
          + (f", equals np.rot90: {exact}" if exact is not None else ""))

# Convolve a random image with the bank and pool over orientations
O = OrientationSet(8)
x = gen.random((1, 32, 32, 1))
bank = w[None, :, :, None]
y, _ = L.rotconv_forward(x, bank, O, pad=4)
z, _ = L.orientation_pool_forward(y, O)
print("responses", y.shape, "-> vectors", z.shape)

# Turning the image turns the field: same vectors, rotated by 90 degrees
y_rot, _ = L.rotconv_forward(np.rot90(x, 1, axes=(1, 2)), bank, O, pad=4)
z_rot, _ = L.orientation_pool_forward(y_rot, O)
gap = np.abs(z_rot - rot90_field(z, 1, batched=True)).max()
print(f"max deviation from exact equivariance: {gap:.2e}")

# The magnitudes are invariant, the angles carry the orientation
print("magnitude range", L.magnitude(z).min().round(3), L.magnitude(z).max().round(3))
