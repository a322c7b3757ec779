"""A walk through the measurement model: masks, zero filling, and data fidelity.

Run with ``python demos/kspace_tour.py``; it writes a few graymaps to
``runs/kspace_tour`` and prints what each step does to image quality.
"""
from pathlib import Path

import numpy as np

from sftkd import (data_fidelity, fft2c, forward_operator, gen_phantom, ifft2c,
                   make_cartesian_mask, psnr, ssim, zero_filled)
from sftkd.training import write_pgm

out = Path("runs/kspace_tour")
out.mkdir(parents=True, exist_ok=True)

x = gen_phantom(64, 64, n_ellipses=8, seed=1)
write_pgm(out / "target.pgm", x)

# The centered orthonormal FFT keeps energy, so image and k-space norms agree.
k = fft2c(x)
print(f"|x| = {np.linalg.norm(x):.6f}, |F x| = {np.linalg.norm(k):.6f}")
print(f"roundtrip error {np.abs(ifft2c(k) - x).max():.1e}")

# Undersampling drops whole phase-encode rows; the center block is always kept.
for accel in (4, 5):
    mask = make_cartesian_mask(64, 64, accel, seed=0)
    x_u = zero_filled(forward_operator(x, mask))
    write_pgm(out / f"zero_filled_{accel}x.pgm", x_u)
    print(f"{accel}x: {mask.n_sampled}/64 lines ({mask.center_lines} central), zero-filled "
          f"PSNR {psnr(x_u, x):.2f} dB, SSIM {ssim(x_u, x):.3f}")

# A data-fidelity layer pastes the measured rows back into any estimate.
mask = make_cartesian_mask(64, 64, 4, seed=0)
y = forward_operator(x, mask)
blurry = np.clip(x + 0.2 * np.random.default_rng(0).standard_normal(x.shape), 0, 1)
for lam in (0.1, 1.0, np.inf):
    fixed = data_fidelity(blurry, y, mask, lam)
    print(f"noisy estimate {psnr(blurry, x):.2f} dB -> after DF(lambda={lam}) {psnr(fixed, x):.2f} dB")

# Projecting twice changes nothing.
once = data_fidelity(blurry, y, mask)
print(f"idempotence error {np.abs(data_fidelity(once, y, mask) - once).max():.1e}")
print(f"images in {out}/")
