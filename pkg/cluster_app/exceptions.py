from swapping_app.exceptions import SwapAlgebraError


class UnsupportedSize(SwapAlgebraError):
    default_detail = 'Polygon size must be between 4 and 10.'
    default_code = 'unsupported_size'


class NotADiagonal(SwapAlgebraError):
    default_detail = 'Edge is not a diagonal of the triangulation.'
    default_code = 'not_a_diagonal'


class DegenerateFlags(SwapAlgebraError):
    default_detail = 'Vertex values must be pairwise distinct.'
    default_code = 'degenerate_flags'


class BadTriangulation(SwapAlgebraError):
    default_detail = 'Diagonals do not form a triangulation of the polygon.'
    default_code = 'bad_triangulation'
