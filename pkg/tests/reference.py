"""Reference data for the worked cycle examples and the census tables."""

from quatideal.hurwitz import HurwitzQuaternion


def P(x, y, z):
    return HurwitzQuaternion(0, 2 * x, 2 * y, 2 * z)


# m = 893, mu_1 = 29i+4j+6k, positions 1..14 as listed in the reference table
CYCLE_893 = [
    P(29, 4, 6), P(3, 22, 20), P(13, 20, 18), P(13, 18, 20), P(3, 20, 22), P(29, 6, 4), P(28, 10, 3),
    P(-21, -14, -16), P(-27, -8, -10), P(-11, -14, -24), P(-11, -24, -14), P(-27, -10, -8),
    P(-21, -16, -14), P(-28, -10, -3),
]
# position 9 is printed as "-27i -8k -10k"; the reading -27i-8j-10k is used above

# m = 1961, mu_1 = 42i+14j+k
CYCLE_1961_A = [  # seed [18, 1 + omega]
    P(42, 14, 1), P(18, 26, 31), P(26, 18, 31), P(14, 42, 1),
    P(-10, -30, -31), P(-26, -14, -33), P(-14, -26, -33), P(-30, -10, -31),
]
CYCLE_1961_B = [  # seed [5, 2 + omega]
    P(42, 14, 1), P(14, 42, 1), P(-14, -26, -33), P(18, 26, 31),
    P(-10, -30, -31), P(-30, -10, -31), P(26, 18, 31), P(-26, -14, -33),
]

CENSUS_ROWS = {
    1000: dict(sigma=379, a=151, percent=39.84, argmax=(645, 4), in_a=(21, (4, 2, 1)), outside=6),
    10000: dict(sigma=4145, a=1853, percent=44.70, argmax=(2310, 8), in_a=(1001, (26, 15, 10)), outside=1002),
}

CLASS_GROUP_ROWS = {
    21: (-84, 4, (2, 2), 1),
    105: (-420, 8, (2, 2, 2), 2),
    645: (-2580, 16, (4, 2, 2), 4),
    2310: (-9240, 32, (4, 2, 2, 2), 8),
    10605: (-42420, 64, (4, 4, 2, 2), 16),
}
