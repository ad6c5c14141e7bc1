from hoairy.diffring.ring import DiffPoly, MatDiffPoly, VecDiffPoly, dot


class BracketService:
    @staticmethod
    def inner(v: VecDiffPoly, w: VecDiffPoly) -> DiffPoly:
        """Bilinear pairing v^T w, without complex conjugation."""
        v.check_same_length(w)
        return dot(v, w)

    @staticmethod
    def sym_bracket(v: VecDiffPoly, w: VecDiffPoly) -> MatDiffPoly:
        v.check_same_length(w)
        k = len(v)
        rows = [[None] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                rows[i][j] = rows[j][i] = v[i] * w[j] + w[i] * v[j]
        return MatDiffPoly(rows)

    @staticmethod
    def antisym_bracket(v: VecDiffPoly, w: VecDiffPoly) -> MatDiffPoly:
        v.check_same_length(w)
        k = len(v)
        rows = [[DiffPoly.zero()] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                entry = v[i] * w[j] - w[i] * v[j]
                rows[i][j] = entry
                rows[j][i] = -entry
        return MatDiffPoly(rows)
