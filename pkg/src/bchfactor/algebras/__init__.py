"""Concrete complete filtered algebras."""
from .laurent import QQ, LaurentRing, LaurentSeries, RationalField, parse_laurent
from .matrixpoly import MatrixPolyFunction, MatrixPolyRing, evaluate_at_zero, riemann_integral
from .adjoined import AdjoinedSeries
from .triangular import TriangularMatrix
from .bivariate import BivariateMatrixSeries

_DECODERS = {
    "MatrixPolyFunction": MatrixPolyFunction.from_dict,
    "AdjoinedSeries": AdjoinedSeries.from_dict,
    "TriangularMatrix": TriangularMatrix.from_dict,
    "BivariateMatrixSeries": BivariateMatrixSeries.from_dict,
}


def from_dict(data):
    """Rebuild any element serialized with ``to_dict``."""
    return _DECODERS[data["type"]](data)


__all__ = [
    "QQ", "RationalField", "LaurentRing", "LaurentSeries", "parse_laurent",
    "MatrixPolyFunction", "MatrixPolyRing", "riemann_integral", "evaluate_at_zero",
    "AdjoinedSeries", "TriangularMatrix", "BivariateMatrixSeries", "from_dict",
]
