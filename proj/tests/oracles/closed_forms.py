"""Closed-form kernel and measure values used by the unit tests."""
import numpy as np

g = np.exp(-np.subtract.outer([0.0, 1.0, 2.0], [0.0, 1.0, 2.0]) ** 2 / 2.0)
print("gaussian gram {0,1,2} eigenvalues:", np.linalg.eigvalsh(g))
print("gaussian K(0,1):", np.exp(-0.5))
print("embed gaussian, delta0 - delta1 at 0:", 1.0 - np.exp(-0.5))
print("mmd2 gaussian delta0 vs delta1:", 2.0 - 2.0 * np.exp(-0.5))

# Bochner quadrature of the Gaussian kernel on the default spectral grid.
xi = np.linspace(-10.0, 10.0, 801)
w = np.full(xi.size, xi[1] - xi[0])
w[0] = w[-1] = w[0] / 2
dens = np.exp(-xi ** 2 / 2) / np.sqrt(2 * np.pi)
for s in (0.5, 1.0, 3.0):
    print("bochner s =", s, abs(np.sum(w * dens * np.cos(s * xi)) - np.exp(-s * s / 2)))

# Half-indicator on [-1, 1]: Fourier transform sin(xi)/xi.
x = np.linspace(-1.0, 1.0, 20001)
w = np.full(x.size, x[1] - x[0])
w[0] = w[-1] = w[0] / 2
print("fourier of 1/2 on [-1,1] at pi:", np.sum(w * 0.5 * np.exp(-1j * x * np.pi)))
