"""Reference data: the 3 x 10 Topcode-matrix shared by six coloured graphs,
and a 39-digit number string published alongside it."""

from .topcode import TopcodeMatrix

REFERENCE_TOPCODE = TopcodeMatrix(
    (6, 5, 6, 6, 6, 1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
    (7, 7, 9, 10, 11, 7, 8, 9, 10, 11),
)

REFERENCE_NUMBER_STRING = "617725639104665117611678711891089111011"
