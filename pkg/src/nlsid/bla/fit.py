from dataclasses import dataclass, field

import numpy as np

from bpyutils import log

from nlsid.__attr__     import __name__ as NAME
from nlsid.bla.rational import RationalModel, parameter_names
from nlsid              import settings
from nlsid.exception    import FitError, RankDeficientError

logger = log.get_logger(name = NAME)

COVARIANCE_FLAG = "unreliable under nonlinear distortions"

_RANK_TOLERANCE = 1e-10
_MAX_DAMPING    = 1e12

@dataclass(eq = False)
class FitResult:
    """
    Weighted least-squares rational fit of a measured BLA.

    ``final_cost`` is (1/F) sum_k |G_k - G(z_k, theta)|^2 / sigma_k^2; with consistent
    weights and linear behavior it stays close to one. ``covariance`` follows the linear
    theory and carries ``covariance_flag`` because it ignores the nonlinear distortions.
    """
    model:           RationalModel
    final_cost:      float
    iterations:      int
    covariance:      np.ndarray
    covariance_flag: str        = COVARIANCE_FLAG
    cost_history:    list       = field(default_factory = list)
    bins:            np.ndarray = None
    residuals:       np.ndarray = None
    weighted:        bool       = True
    converged:       bool       = True

    @property
    def parameter_names(self):
        return self.model.parameter_names

    @property
    def parameter_std(self):
        return np.sqrt(np.abs(np.diag(self.covariance)))

    @property
    def residual_over_sigma(self):
        return np.abs(self.residuals)

    def to_dict(self):
        return dict(
            model           = self.model.to_dict(),
            final_cost      = float(self.final_cost),
            iterations      = int(self.iterations),
            covariance      = self.covariance.tolist(),
            covariance_flag = self.covariance_flag,
            parameter_names = self.parameter_names,
            weighted        = self.weighted,
            converged       = self.converged
        )

def _sigma(frf, sigma):
    if sigma is not None:
        sigma = np.broadcast_to(np.asarray(sigma, dtype = float), frf.G.shape)
        if not np.any(np.isfinite(sigma) & (sigma > 0)):
            raise FitError("All fit weights are zero.")
        return sigma, True

    variance = frf.variance

    if variance is None:
        logger.warning("FRF carries no variance: fitting with unit weights.")
        return np.ones(frf.G.shape), False

    sigma = np.sqrt(np.asarray(variance, dtype = float))
    valid = np.isfinite(sigma)

    if not np.any(valid & (sigma > 0)):
        logger.warning("FRF variance is zero at every bin: fitting with unit weights.")
        return np.ones(frf.G.shape), False

    if np.any(valid & (sigma <= 0)):
        # floor vanishing variances to the smallest positive one
        sigma = np.where(valid & (sigma <= 0), np.min(sigma[valid & (sigma > 0)]), sigma)

    return sigma, True

def _powers(z, order, start = 0):
    return z[:, None] ** np.arange(start, order + 1)[None, :]

def _levy(G, z, w, n_num, n_den):
    """
    Linearized equation error w (D(z) G - N(z)) = 0 solved by linear least squares.
    """
    Zb = _powers(z, n_num)
    Za = _powers(z, n_den, start = 1)

    A  = w[:, None] * np.hstack([-Zb, G[:, None] * Za])
    rhs = -w * G

    theta, *_ = np.linalg.lstsq(np.vstack([A.real, A.imag]), np.concatenate([rhs.real, rhs.imag]), rcond = None)

    return theta

def _residuals(theta, G, z, w, n_num, n_den):
    N = _powers(z, n_num) @ theta[:n_num + 1]
    D = 1.0 + _powers(z, n_den, start = 1) @ theta[n_num + 1:]

    return w * (G - N / D), N, D

def _jacobian(theta, z, w, n_num, n_den, N, D):
    Zb = _powers(z, n_num)
    Za = _powers(z, n_den, start = 1)

    J  = np.hstack([-(w / D)[:, None] * Zb, (w * N / D ** 2)[:, None] * Za])

    return np.vstack([J.real, J.imag])

def _stack(e):
    return np.concatenate([e.real, e.imag])

def _check_rank(J, names):
    norms = np.linalg.norm(J, axis = 0)
    norms = np.where(norms > 0, norms, 1.0)

    _, s, Vt = np.linalg.svd(J / norms, full_matrices = False)

    deficient = s < _RANK_TOLERANCE * s[0] if s[0] > 0 else np.ones(s.size, dtype = bool)

    if np.any(deficient):
        directions = [ ]

        for v in Vt[deficient]:
            involved = np.flatnonzero(np.abs(v) > 0.1 * np.max(np.abs(v)))
            directions.append("(%s)" % " ".join("%+.3g*%s" % (v[i], names[i]) for i in involved))

        raise RankDeficientError(directions)

def fit_frf(frf, n_num, n_den, sigma = None, max_iterations = None, tolerance = None):
    """
    Fit a discrete-time rational model to the measured FRF by minimizing the weighted
    cost over the valid excited bins with weights 1/sigma_k (from the FRF variance unless
    ``sigma`` is given). Linear least squares initializes a Levenberg-damped Gauss-Newton
    search on the stacked real and imaginary residuals.
    """
    max_iterations = int(settings.get("max_iterations")) if max_iterations is None else int(max_iterations)
    tolerance      = float(settings.get("tolerance"))     if tolerance      is None else float(tolerance)

    if n_num < 0 or n_den < 0:
        raise FitError("Model orders must be non-negative, got %s/%s." % (n_num, n_den))

    sigma, weighted = _sigma(frf, sigma)

    valid   = frf.valid & np.isfinite(frf.G) & np.isfinite(sigma) & (sigma > 0)
    bins    = frf.bins[valid]
    G       = frf.G[valid]
    w       = 1.0 / sigma[valid]
    F       = bins.size
    n_theta = n_num + n_den + 1
    names   = parameter_names(n_num, n_den)

    if F < n_theta:
        raise FitError("%s usable bins cannot determine %s parameters." % (F, n_theta))

    z       = np.exp(-2j * np.pi * bins / frf.grid.n_samples)
    theta   = _levy(G, z, w, n_num, n_den)

    e, N, D = _residuals(theta, G, z, w, n_num, n_den)
    J       = _jacobian(theta, z, w, n_num, n_den, N, D)

    _check_rank(J, names)

    cost      = float(np.sum(np.abs(e) ** 2) / F)
    history   = [cost]
    damping   = 1e-3
    converged = False
    iteration = 0

    logger.info("Fitting %s/%s model on %s bins (initial cost %.6g)..." % (n_num, n_den, F, cost))

    while iteration < max_iterations:
        if cost == 0.0:
            converged = True
            break

        r        = _stack(e)
        JtJ      = J.T @ J
        gradient = J.T @ r
        accepted = False

        while damping <= _MAX_DAMPING:
            step = np.linalg.solve(JtJ + damping * np.diag(np.diag(JtJ)), -gradient)

            candidate = theta + step
            e_new, N_new, D_new = _residuals(candidate, G, z, w, n_num, n_den)
            cost_new  = float(np.sum(np.abs(e_new) ** 2) / F)

            if np.isfinite(cost_new) and cost_new <= cost:
                accepted = True
                break

            damping *= 10.0

        if not accepted:
            converged = True
            break

        iteration += 1
        decrease   = (cost - cost_new) / cost
        small_step = np.linalg.norm(step) <= tolerance * (np.linalg.norm(theta) + tolerance)

        theta, e, cost = candidate, e_new, cost_new
        J       = _jacobian(theta, z, w, n_num, n_den, N_new, D_new)
        damping = max(damping / 10.0, 1e-12)
        history.append(cost)

        if decrease < tolerance or small_step:
            converged = True
            break

    if not converged:
        logger.warning("Fit stopped at the iteration cap (%s) with cost %.6g." % (max_iterations, cost))

    try:
        covariance = 0.5 * np.linalg.inv(J.T @ J)
    except np.linalg.LinAlgError:
        covariance = np.full((n_theta, n_theta), np.nan)

    return FitResult(
        model        = RationalModel.from_parameters(theta, n_num, n_den),
        final_cost   = cost,
        iterations   = iteration,
        covariance   = covariance,
        cost_history = history,
        bins         = bins,
        residuals    = e,
        weighted     = weighted,
        converged    = converged
    )
