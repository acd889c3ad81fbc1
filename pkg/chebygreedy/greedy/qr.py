import numpy as np
import scipy.linalg


class IncrementalQR:
    """
    Thin QR factorization grown one column at a time.

    Keeps ``Q`` (orthonormal columns), ``R`` (upper triangular) and the
    running least-squares residual of a fixed target ``y``, so adding a column
    costs ``O(n k)``. Gram-Schmidt is applied twice per column to keep ``Q``
    orthonormal to working precision.

    Properties:
        dependency_tol (float):
            A column whose component orthogonal to the current span is below
            ``dependency_tol`` times its own length is rejected.
    """
    def __init__(self, target: np.ndarray, dependency_tol: float = 1e-12):
        target = np.asarray(target, dtype=float)

        if target.ndim != 1:
            raise ValueError('The target must be a vector.')

        self.dependency_tol = dependency_tol
        self.__q        = np.zeros((target.size, 0))
        self.__qty      = np.zeros(0)
        self.__r        = np.zeros((0, 0))
        self.__residual = target.copy()
        self.__target   = target.copy()

    @property
    def q(self) -> np.ndarray:
        return self.__q

    @property
    def r(self) -> np.ndarray:
        return self.__r

    @property
    def rank(self) -> int:
        return self.__q.shape[1]

    @property
    def residual(self) -> np.ndarray:
        """``y - Q Q^T y``."""
        return self.__residual

    def orthogonal_part(self, column: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Split ``column`` into its coordinates on ``Q`` and the orthogonal remainder."""
        remainder = np.asarray(column, dtype=float).copy()
        coordinates = np.zeros(self.rank)

        for _ in range(2):
            correction = self.__q.T @ remainder
            remainder -= self.__q @ correction
            coordinates += correction

        return coordinates, remainder

    def is_dependent(self, column: np.ndarray) -> bool:
        length = float(np.linalg.norm(column))
        _, remainder = self.orthogonal_part(column)
        return length == 0.0 or float(np.linalg.norm(remainder)) < self.dependency_tol * length

    def append(self, column: np.ndarray) -> bool:
        """
        Add a column.

        Returns:
            bool:
                ``False`` (and no change) if the column is numerically dependent
                on the columns already present.
        """
        length = float(np.linalg.norm(column))
        coordinates, remainder = self.orthogonal_part(column)
        rho = float(np.linalg.norm(remainder))

        if length == 0.0 or rho < self.dependency_tol * length:
            return False

        q_new = remainder / rho
        k = self.rank

        r = np.zeros((k + 1, k + 1))
        r[:k, :k] = self.__r
        r[:k, k] = coordinates
        r[k, k] = rho

        self.__r = r
        self.__q = np.column_stack([self.__q, q_new])
        self.__qty = np.append(self.__qty, q_new @ self.__target)
        self.__residual = self.__residual - q_new * (q_new @ self.__residual)

        return True

    def coefficients(self) -> np.ndarray:
        """Least-squares coefficients on the accepted columns: ``R c = Q^T y``."""
        if not self.rank:
            return np.zeros(0)

        return scipy.linalg.solve_triangular(self.__r, self.__qty, lower=False)
