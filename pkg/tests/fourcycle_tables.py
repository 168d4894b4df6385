"""Tables of the 4-cycle example: binary Hilbert basis and 16x indicator expansions.

``BASIS_COLUMNS[x][j]`` is entry x of basis vector j (states in the order of
``LABELS``); ``EXPANSION_X16[r][j]`` is 16 times the coefficient of row ``ROWS[r]``
in 1 - b_j.
"""

LABELS = ('++++', '+++-', '++-+', '++--', '+-++', '+-+-', '+--+', '+---', '-+++', '-++-', '-+-+', '-+--', '--++', '--+-', '---+', '----')

ROWS = ('I', 'D', 'C', 'B', 'A', 'BA', 'CB', 'DC', 'DA')

BASIS_COLUMNS = [
    [0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0],
]

EXPANSION_X16 = [
    [12, 12, 12, 12, 12, 12, 12, 8, 12, 8, 12, 12, 12, 8, 12, 8, 8, 12, 12, 8, 12, 8, 8, 12],
    [-4, -4, 0, -4, 4, 0, 0, 0, 4, 0, -4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4, 0, 0, 0],
    [4, -4, -4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4, 0, 4, 0, 0, 0, -4, 0, -4, 0, 0, 0],
    [0, 0, -4, 0, 0, -4, -4, 0, 0, 0, 0, -4, 4, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 4],
    [0, 0, 0, -4, -4, -4, 0, 0, 4, 0, 4, 4, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, -4],
    [0, 0, 0, 0, 0, -4, 0, 4, 0, 4, 0, 4, 0, -4, 0, -4, -4, -4, 0, 4, 0, 4, -4, 4],
    [0, 0, -4, 0, 0, 0, 4, 4, 0, 4, 0, 0, -4, 4, 0, -4, -4, 0, 4, -4, 0, -4, 4, 0],
    [4, -4, 0, 0, 0, 0, 0, 4, 0, -4, 0, 0, 0, 4, -4, 4, -4, 0, 0, -4, 4, 4, -4, 0],
    [0, 0, 0, -4, 4, 0, 0, -4, -4, 4, 4, 0, 0, 4, 0, -4, 4, 0, 0, -4, 0, 4, -4, 0],
]
