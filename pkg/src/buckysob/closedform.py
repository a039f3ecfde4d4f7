"""Known closed-form results for the buckyball Laplacian.

These literals are the independent oracles everything else is checked
against: the factored characteristic polynomial, the eigenvalue table
(radical forms and multiplicities), the sharp constant C0, and the
numerator/denominator of the sharp constant function C(a).
"""

from fractions import Fraction

from buckysob.polynomials import IntPolynomial, RationalFunction

# det(xI - A) = x (x-2)^9 (x-5)^4 (x^2-5x+3)^5 (x^2-7x+11)^5
#               (x^2-7x+8)^4 (x^2-9x+19)^3 (x^4-9x^3+25x^2-22x+4)^3
CHARPOLY_FACTORS: tuple[tuple[IntPolynomial, int], ...] = (
    (IntPolynomial([0, 1]), 1),
    (IntPolynomial([-2, 1]), 9),
    (IntPolynomial([-5, 1]), 4),
    (IntPolynomial([3, -5, 1]), 5),
    (IntPolynomial([11, -7, 1]), 5),
    (IntPolynomial([8, -7, 1]), 4),
    (IntPolynomial([19, -9, 1]), 3),
    (IntPolynomial([4, -22, 25, -9, 1]), 3),
)


def charpoly_product() -> IntPolynomial:
    p = IntPolynomial([1])
    for factor, exp in CHARPOLY_FACTORS:
        p = p * factor ** exp
    return p


# Radical display forms per (factor, ascending root index).
ROOT_HINTS: dict[tuple[IntPolynomial, int], str] = {
    (CHARPOLY_FACTORS[0][0], 0): "0",
    (CHARPOLY_FACTORS[1][0], 0): "2",
    (CHARPOLY_FACTORS[2][0], 0): "5",
    (CHARPOLY_FACTORS[3][0], 0): "(5-sqrt(13))/2",
    (CHARPOLY_FACTORS[3][0], 1): "(5+sqrt(13))/2",
    (CHARPOLY_FACTORS[4][0], 0): "(7-sqrt(5))/2",
    (CHARPOLY_FACTORS[4][0], 1): "(7+sqrt(5))/2",
    (CHARPOLY_FACTORS[5][0], 0): "(7-sqrt(17))/2",
    (CHARPOLY_FACTORS[5][0], 1): "(7+sqrt(17))/2",
    (CHARPOLY_FACTORS[6][0], 0): "(9-sqrt(5))/2",
    (CHARPOLY_FACTORS[6][0], 1): "(9+sqrt(5))/2",
    (CHARPOLY_FACTORS[7][0], 0): "(9-sqrt(5)-sqrt(38-2*sqrt(5)))/4",
    (CHARPOLY_FACTORS[7][0], 1): "(9+sqrt(5)-sqrt(38+2*sqrt(5)))/4",
    (CHARPOLY_FACTORS[7][0], 2): "(9-sqrt(5)+sqrt(38-2*sqrt(5)))/4",
    (CHARPOLY_FACTORS[7][0], 3): "(9+sqrt(5)+sqrt(38+2*sqrt(5)))/4",
}

# Multiplicities of the 15 distinct eigenvalues, ascending by value.
TABLE_MULTIPLICITIES = (1, 3, 5, 3, 4, 9, 5, 3, 3, 5, 3, 5, 4, 4, 3)

# Sharp constant of the mean-zero inequality.
C0 = Fraction(239741, 376200)
C0_DECIMAL = 0.63727

# Sharp constant function C(a) = N(a)/D(a) of the damped inequality.
CA_NUM_COEFFS = (
    3344, 160806, 1153562, 3594661, 6334271, 7104785, 5406109, 2893077,
    1109403, 306415, 60463, 8315, 757, 41, 1,
)

CA_DEN_FACTORS: tuple[IntPolynomial, ...] = (
    IntPolynomial([0, 1]),
    IntPolynomial([2, 1]),
    IntPolynomial([5, 1]),
    IntPolynomial([3, 5, 1]),
    IntPolynomial([8, 7, 1]),
    IntPolynomial([11, 7, 1]),
    IntPolynomial([19, 9, 1]),
    IntPolynomial([4, 22, 25, 9, 1]),
)


def ca_closed_form() -> RationalFunction:
    den = IntPolynomial([1])
    for f in CA_DEN_FACTORS:
        den = den * f
    return RationalFunction(IntPolynomial(CA_NUM_COEFFS), den)
