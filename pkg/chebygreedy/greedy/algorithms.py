"""
Thresholding Greedy Algorithm, Weak Orthogonal Matching Pursuit and the Weak
Chebyshev Greedy Algorithm.

Every algorithm returns a :class:`GreedyTrace`. Selection ties go to the lowest
element index.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.greedy.chebyshev import ChebyshevConfig, chebyshev_projection
from chebygreedy.greedy.qr import IncrementalQR
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.models.space import FunctionVector, norming_vector
from chebygreedy.models.traces import GreedyTrace, Termination, WeaknessPolicy
from chebygreedy.utils.log import get_logger


log = get_logger(__name__)

# scan maxima of the norming functional below this count as zero. F_{f_m} has
# norm 1 whatever the scale of f_0, so this absolute threshold is the relative
# stop scan_max <= 1e-14 ||f_0|| on functionals scaled by ||f_0||.
ZERO_FUNCTIONAL_TOL = 1e-14


def _check_inputs(f0: FunctionVector, dictionary: Dictionary, max_m: int):
    if not isinstance(f0, FunctionVector):
        raise StructuralError(f"f0 must be a FunctionVector, not '{type(f0)}'!")

    if f0.space != dictionary.space:
        raise StructuralError('f0 and the dictionary live in different spaces.')

    if max_m < 0:
        raise StructuralError('The iteration budget must be non-negative.')

    if max_m > dictionary.size:
        raise StructuralError(f'max_m={max_m} exceeds the dictionary size {dictionary.size}.')


def tga(f: FunctionVector, basis: Dictionary, m: int) -> GreedyTrace:
    """
    Thresholding Greedy Algorithm: keep the ``m`` largest basis coefficients.

    The coefficients are the values of the dual (biorthogonal) functionals,
    i.e. the solution of ``Phi c = f``.

    Parameters:
        f (FunctionVector):
            The element to approximate.

        basis (Dictionary):
            A square, full-rank dictionary.

        m (int):
            Number of terms.

    Returns:
        GreedyTrace:
            Iteration ``j`` holds the ``j`` largest terms; ``functional_values``
            records ``|c_{k_j}|`` for both the achieved and the scan entry.

    Raises:
        DomainError:
            If the basis is not square or is rank deficient.
    """
    _check_inputs(f, basis, m)
    n, count = basis.matrix.shape

    if n != count:
        raise DomainError(f'TGA needs a basis: the dictionary is {n} x {count}.')

    singular_values = np.linalg.svd(basis.matrix, compute_uv=False)

    if singular_values[-1] <= 1e-12 * singular_values[0]:
        raise DomainError('The basis is rank deficient.')

    coefficients = np.linalg.solve(basis.matrix, f.values)
    magnitudes = np.abs(coefficients)
    order = np.argsort(-magnitudes, kind='stable')
    largest = float(magnitudes[order[0]]) if count else 0.0

    trace = GreedyTrace('tga', f.norm())
    residual = f

    for j in range(m):
        index = int(order[j])

        if magnitudes[index] <= 1e-14 * largest:
            trace.finish(Termination.RESIDUAL_TOL, residual)
            return trace

        chosen = order[:j + 1]
        approximant = basis.matrix[:, chosen] @ coefficients[chosen]
        residual = FunctionVector(f.values - approximant, f.space)
        trace.record(index, coefficients[chosen], residual.norm(), magnitudes[index], magnitudes[index])

    if m < count and magnitudes[order[m]] <= 1e-14 * largest:
        trace.finish(Termination.RESIDUAL_TOL, residual)
    else:
        trace.finish(Termination.MAX_ITERS, residual)

    return trace


def _scan(values: np.ndarray, policy: WeaknessPolicy, blocked: np.ndarray) -> tuple[int, np.ndarray, float]:
    # selected and skipped elements lie in the current span, so their functionals vanish
    magnitudes = np.where(blocked, 0.0, np.abs(values))
    scan_max = float(np.max(magnitudes))
    index = policy.select(magnitudes, ~blocked) if scan_max > ZERO_FUNCTIONAL_TOL else -1

    if index >= 0 and magnitudes[index] <= ZERO_FUNCTIONAL_TOL:
        index = -1

    return index, magnitudes, scan_max


def wcga(
        f0:         FunctionVector,
        dictionary: Dictionary,
        policy:     WeaknessPolicy = WeaknessPolicy(),
        max_m:      Optional[int] = None,
        solver:     ChebyshevConfig = ChebyshevConfig()
) -> GreedyTrace:
    """
    Weak Chebyshev Greedy Algorithm.

    Each iteration scans ``|F_{f_{m-1}}(g)|`` over the whole dictionary, picks
    an element according to ``policy``, and replaces the approximant by the
    best approximation of ``f0`` from the span of all picked elements.

    Parameters:
        f0 (FunctionVector):
            The element to approximate.

        dictionary (Dictionary):
            The dictionary.

        policy (WeaknessPolicy):
            Weakness parameter and selection rule.

        max_m (Optional[int]):
            Iteration budget; defaults to the dictionary size.

        solver (ChebyshevConfig):
            Projection solver and termination settings.

    Returns:
        GreedyTrace:
            The run history.

    Raises:
        NonConvergenceError:
            If a Chebyshev projection fails to certify optimality.
    """
    max_m = dictionary.size if max_m is None else max_m
    _check_inputs(f0, dictionary, max_m)

    space = dictionary.space
    initial_norm = f0.norm()
    trace = GreedyTrace('wcga', initial_norm)
    blocked = np.zeros(dictionary.size, dtype=bool)
    tracker = IncrementalQR(np.zeros(space.dim), dependency_tol=solver.rank_tol)
    residual = f0

    while trace.iterations < max_m:
        residual_norm = trace.residual_norms[-1]

        if residual_norm <= solver.residual_tol * initial_norm:
            trace.finish(Termination.RESIDUAL_TOL, residual)
            return trace

        functionals = norming_vector(space, residual) @ dictionary.matrix
        index, magnitudes, scan_max = _scan(functionals, policy, blocked)

        if index < 0:
            trace.finish(Termination.ZERO_FUNCTIONALS, residual)
            return trace

        if not tracker.append(dictionary.whitened[:, index]):
            log.warning('Element %d is numerically dependent on the current selection; excluded from the span', index)
            blocked[index] = True
            trace.skip(index)
            continue

        blocked[index] = True
        chosen = trace.selected + [index]
        projection = chebyshev_projection(f0, dictionary.matrix[:, chosen], space, solver)
        residual = projection.residual
        trace.record(index, projection.coefficients, residual.norm(), magnitudes[index], scan_max)
        log.debug('wcga m=%d picked %d (|F|=%.3e of %.3e), residual %.3e', trace.iterations, index,
                  magnitudes[index], scan_max, trace.residual_norms[-1])

    if trace.residual_norms[-1] <= solver.residual_tol * initial_norm:
        trace.finish(Termination.RESIDUAL_TOL, residual)
    else:
        trace.finish(Termination.MAX_ITERS, residual)

    return trace


def womp(
        f0:         FunctionVector,
        dictionary: Dictionary,
        policy:     WeaknessPolicy = WeaknessPolicy(),
        max_m:      Optional[int] = None,
        solver:     ChebyshevConfig = ChebyshevConfig()
) -> GreedyTrace:
    """
    Weak Orthogonal Matching Pursuit (OMP for ``t = 1``), the Hilbert-space WCGA.

    Same contract as :func:`wcga`; the orthogonal projection is maintained by
    an incremental QR factorization in the whitened (``sqrt(w)``-scaled)
    coordinates. A selected element whose new ``R`` diagonal falls below
    ``solver.rank_tol`` is skipped with a warning and excluded from the span.

    Raises:
        DomainError:
            If the ambient exponent is not 2.
    """
    max_m = dictionary.size if max_m is None else max_m
    _check_inputs(f0, dictionary, max_m)

    space = dictionary.space

    if not space.is_hilbert:
        raise DomainError(f'WOMP needs p = 2; the space has p = {space.p:g}. Use wcga instead.')

    root_w = np.sqrt(space.weights)
    psi = dictionary.whitened
    qr = IncrementalQR(root_w * f0.values, dependency_tol=solver.rank_tol)

    initial_norm = f0.norm()
    trace = GreedyTrace('womp', initial_norm)
    blocked = np.zeros(dictionary.size, dtype=bool)

    def current_residual() -> FunctionVector:
        return FunctionVector(qr.residual / root_w, space)

    while trace.iterations < max_m:
        residual_norm = trace.residual_norms[-1]

        if residual_norm <= solver.residual_tol * initial_norm:
            trace.finish(Termination.RESIDUAL_TOL, current_residual())
            return trace

        functionals = psi.T @ qr.residual / residual_norm
        index, magnitudes, scan_max = _scan(functionals, policy, blocked)

        if index < 0:
            trace.finish(Termination.ZERO_FUNCTIONALS, current_residual())
            return trace

        blocked[index] = True

        if not qr.append(psi[:, index]):
            log.warning('Element %d is numerically dependent on the current selection; excluded from the span', index)
            trace.skip(index)
            continue

        trace.record(index, qr.coefficients(), float(np.linalg.norm(qr.residual)), magnitudes[index], scan_max)
        log.debug('womp m=%d picked %d (|F|=%.3e of %.3e), residual %.3e', trace.iterations, index,
                  magnitudes[index], scan_max, trace.residual_norms[-1])

    if trace.residual_norms[-1] <= solver.residual_tol * initial_norm:
        trace.finish(Termination.RESIDUAL_TOL, current_residual())
    else:
        trace.finish(Termination.MAX_ITERS, current_residual())

    return trace


def run_greedy(
        algorithm:  str,
        f0:         FunctionVector,
        dictionary: Dictionary,
        policy:     WeaknessPolicy = WeaknessPolicy(),
        max_m:      Optional[int] = None,
        solver:     ChebyshevConfig = ChebyshevConfig()
) -> GreedyTrace:
    """Dispatch on an algorithm name: 'tga', 'womp' or 'wcga'."""
    if algorithm == 'tga':
        return tga(f0, dictionary, dictionary.size if max_m is None else max_m)

    if algorithm == 'womp':
        return womp(f0, dictionary, policy, max_m, solver)

    if algorithm == 'wcga':
        return wcga(f0, dictionary, policy, max_m, solver)

    raise StructuralError(f"Unknown algorithm '{algorithm}'; expected 'tga', 'womp' or 'wcga'.")
