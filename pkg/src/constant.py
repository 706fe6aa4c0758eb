from enum import Enum, IntEnum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)


# Dense tables are allocated per field; keep them small.
MAX_FIELD_ORDER = 2 ** 16

DEFAULT_PSI_SHIFT = 1
DEFAULT_SAMPLE_SIZE = 2000
DEFAULT_SEED = 42
EXHAUSTIVE_THRESHOLD = 10 ** 7
APPROX_DIGITS = 12

THREADS_ENV_VAR = "FINITE_HGF_THREADS"
SLOW_TESTS_ENV_VAR = "FINITE_HGF_SLOW"


class VerifyMode(StrEnum):
    EXHAUSTIVE = "exhaustive"
    SAMPLE = "sample"


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"
    CSV = "csv"


class ExitCode(IntEnum):
    """Stable process exit codes of the CLI."""
    PASS = 0
    FAILURE = 1
    USAGE = 2


class PointDomain(Enum):
    """Where the free variable of an identity ranges."""
    LINE = 1        # λ ∈ k
    PLANE = 2       # (x, y) ∈ k²
    CHARACTER = 3   # a character ν ∈ ǩ, no field variable


class IdentityId(StrEnum):
    """Catalog identifiers, as accepted by `verify --ids`."""
    # structural
    POCHHAMMER_PRODUCT = "pochhammer-product"
    GAUSS_REFLECTION = "gauss-reflection"
    POCHHAMMER_REFLECTION = "pochhammer-reflection"
    DAVENPORT_HASSE = "davenport-hasse"
    POCHHAMMER_MULTIPLICATION = "pochhammer-multiplication"
    JACOBI_GAUSS = "jacobi-gauss"
    JACOBI_POCHHAMMER = "jacobi-pochhammer"
    EXPONENTIAL_VALUE = "exponential-value"
    BINOMIAL_VALUE = "binomial-value"
    SHIFT = "shift"
    EXCHANGE = "exchange"
    CANCELLATION = "cancellation"
    # closed forms
    EULER_GAUSS_SUM = "euler-gauss-sum"
    KUMMER_SUM = "kummer-sum"
    DIXON_SUM = "dixon-sum"
    PFAFF = "pfaff"
    # single-variable product formulas
    KUMMER_EXPONENTIAL = "kummer-exponential"
    QUADRATIC_ARGUMENT = "quadratic-argument"
    EULER_TRANSFORMATION = "euler-transformation"
    RAMANUJAN_PRODUCT = "ramanujan-product"
    BESSEL_PRODUCT = "bessel-product"
    BESSEL_PRODUCT_TWISTED = "bessel-product-twisted"
    BESSEL_REFLECTION = "bessel-reflection"
    BESSEL_CONJUGATE_REFLECTION = "bessel-conjugate-reflection"
    TWO_F_ZERO_PRODUCT = "two-f-zero-product"
    TWO_F_ZERO_CONJUGATE_PRODUCT = "two-f-zero-conjugate-product"
    CONFLUENT_CONJUGATE_PRODUCT = "confluent-conjugate-product"
    CONFLUENT_SQUARE_PRODUCT = "confluent-square-product"
    CONFLUENT_SQUARE_PRODUCT_TWISTED = "confluent-square-product-twisted"
    CUBIC_PRODUCT = "cubic-product"
    # two-variable
    APPELL_PRODUCT = "appell-product"
    BAILEY_PRODUCT = "bailey-product"
    APPELL_DIAGONAL = "appell-diagonal"
