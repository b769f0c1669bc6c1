"""
도메인 예외 정의
모든 예외는 GelfandError를 상속하며 code로 위반된 검사 이름을 노출
"""


class GelfandError(Exception):
    """기본 예외"""
    code = "GelfandError"

    def __str__(self) -> str:
        message = super().__str__()
        return f"{self.code}: {message}" if message else self.code


# core_linalg
class InvalidMatrixError(GelfandError):
    code = "InvalidMatrix"


class NotSquareError(GelfandError):
    code = "NotSquare"


class NotHermitianError(GelfandError):
    code = "NotHermitian"


class NoConvergenceError(GelfandError):
    code = "NoConvergence"


class NotPSDError(GelfandError):
    code = "NotPSD"


# cstar_core
class InvalidSignatureError(GelfandError):
    code = "InvalidSignature"


class SignatureMismatchError(GelfandError):
    code = "SignatureMismatch"


class NotSelfAdjointError(GelfandError):
    code = "NotSelfAdjoint"


class NotEffectError(GelfandError):
    code = "NotEffect"


# cstar_maps
class InvalidDimensionError(GelfandError):
    code = "InvalidDimension"


class DomainNotSingleBlockError(GelfandError):
    code = "DomainNotSingleBlock"


class NotPUError(GelfandError):
    code = "NotPU"


# prob_monads
class InvalidDistributionError(GelfandError):
    code = "InvalidDistribution"


class SizeMismatchError(GelfandError):
    code = "SizeMismatch"


class IndexOutOfRangeError(GelfandError):
    code = "IndexOutOfRange"


class NotStochasticError(GelfandError):
    code = "NotStochastic"


class NotMIUError(GelfandError):
    code = "NotMIU"


class NotFunctionalError(GelfandError):
    code = "NotFunctional"


class NotCommutativeError(GelfandError):
    code = "NotCommutative"


# states_effects
class InvalidStateError(GelfandError):
    code = "InvalidState"


class NotEModHomError(GelfandError):
    code = "NotEModHom"


class InconsistentAffineDataError(GelfandError):
    code = "InconsistentAffineData"


class SingularSystemError(GelfandError):
    code = "SingularSystem"


# triangle / cli
class DimensionTooLargeError(GelfandError):
    code = "DimensionTooLarge"


class ShapeMismatchError(GelfandError):
    code = "ShapeMismatch"


class ParseError(GelfandError):
    """입력 파일 파싱 실패 (CLI 종료 코드 2)"""
    code = "ParseError"
