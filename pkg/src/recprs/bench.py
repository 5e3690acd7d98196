"""Matrix-size and timing table for recursive versus reduced nested subresultants.

Dimensions are asserted against the closed-form formulas; timings are
only reported.
"""

import time
from dataclasses import dataclass

from .families import reference_gcd_chain, X
from .errors import RecPrsError
from .nested import in_theorem_range
from .poly import Poly
from .prs import recursive_prs
from .recursive import rec_dims, rec_subres_matrix
from .classic import determinant_poly
from .reduced import reduced_dims, reduced_matrix


def gcd_chain_family(depth):
    """Pair whose recursive PRS has exactly ``depth`` stages.

    The common factor ``(x-1)^e (x+2)^e`` with ``e = depth - 1`` loses
    one multiplicity per stage.  ``depth = 3`` is the ``m=6, n=5``
    profile with degree chain ``(6, 4, 2, 0)``.
    """
    if depth == 3:
        return reference_gcd_chain()
    if depth < 1:
        raise ValueError("depth must be >= 1")
    e = depth - 1
    c = Poly.from_roots([1] * e + [-2] * e)
    return c * Poly.from_roots([2, -3]), c * (X - 3)


@dataclass
class BenchRecord:
    k: int
    j: int
    recursive_dims: tuple
    reduced_dims: tuple
    construct_seconds: float = None
    det_seconds: float = None
    max_bits: int = None
    recursive_seconds: float = None
    status: str = "ok"

    def to_json(self):
        return {
            "k": self.k,
            "j": self.j,
            "recursive_dims": list(self.recursive_dims),
            "reduced_dims": list(self.reduced_dims),
            "construct_seconds": self.construct_seconds,
            "det_seconds": self.det_seconds,
            "max_bits": self.max_bits,
            "recursive_seconds": self.recursive_seconds,
            "status": self.status,
        }


def _max_bits(mat):
    return max((max(abs(e.numerator).bit_length(), e.denominator.bit_length())
                for e in mat.entries), default=0)


def bench(f, g, max_recursive_cols=60, timings=True):
    """One record per ``(k, j)`` of the complete recursive PRS of ``f, g``.

    The recursive matrix is also built (and timed) when it has at most
    ``max_recursive_cols`` columns.
    """
    clock = time.perf_counter if timings else (lambda: 0.0)
    r = recursive_prs(f, g)
    chain = r.degree_chain
    m, n = f.degree, g.degree
    records = []
    for k in range(1, r.depth + 1):
        for j in range(chain[k - 1] - 2, -1, -1):
            if not in_theorem_range(chain, k, j, n):
                continue
            rec = BenchRecord(k, j, rec_dims(m, n, chain, k, j), reduced_dims(m, n, k, j))
            try:
                t0 = clock()
                mat = reduced_matrix(f, g, chain, k, j)
                t1 = clock()
                determinant_poly(mat, j)
                t2 = clock()
            except RecPrsError as exc:
                rec.status = exc.code
                records.append(rec)
                continue
            assert mat.shape == rec.reduced_dims, "reduced dimensions disagree with the formula"
            assert mat.cols <= m + n, "reduced matrix wider than m + n"
            rec.construct_seconds = t1 - t0 if timings else None
            rec.det_seconds = t2 - t1 if timings else None
            rec.max_bits = _max_bits(mat)
            if rec.recursive_dims[1] <= max_recursive_cols:
                t0 = clock()
                big = rec_subres_matrix(f, g, chain, k, j)
                determinant_poly(big, j)
                rec.recursive_seconds = clock() - t0 if timings else None
                assert big.shape == rec.recursive_dims, "recursive dimensions disagree with the formula"
            records.append(rec)
    return chain, records
