"""Hand-transcribed values from the bridge worked examples."""

# i -> (bits, cost, connected, reliability or None); reliability is printed
# to 5 decimals and only listed for feasible rows at budget 26
BRIDGE_STATES = {
    1: ("00000", 0, False, None), 2: ("10000", 2, False, None), 3: ("01000", 4, False, None),
    4: ("11000", 6, False, None), 5: ("00100", 6, False, None), 6: ("10100", 8, False, None),
    7: ("01100", 10, False, None), 8: ("11100", 12, False, None), 9: ("00010", 7, False, None),
    10: ("10010", 9, True, 0.76000), 11: ("01010", 11, False, None),
    12: ("11010", 13, True, 0.76000), 13: ("00110", 13, False, None),
    14: ("10110", 15, True, 0.76000), 15: ("01110", 17, True, 0.61200),
    16: ("11110", 19, True, 0.79060), 17: ("00001", 10, False, None),
    18: ("10001", 12, False, None), 19: ("01001", 14, True, 0.67500),
    20: ("11001", 16, True, 0.67500), 21: ("00101", 16, False, None),
    22: ("10101", 18, True, 0.60562), 23: ("01101", 20, True, 0.67500),
    24: ("11101", 22, True, 0.73556), 25: ("00011", 17, False, None),
    26: ("10011", 19, True, 0.67500), 27: ("01011", 21, True, 0.67500),
    28: ("11011", 23, True, 0.92200), 29: ("00111", 23, False, None),
    30: ("10111", 25, True, 0.88113), 31: ("01111", 27, True, None),
    32: ("11111", 29, True, None),
}

# minimal paths in listing order: arcs, cost, probability
BRIDGE_PATHS = [
    ({1, 4}, 9, 0.76),
    ({1, 3, 5}, 18, 0.605625),
    ({2, 5}, 14, 0.675),
    ({2, 3, 4}, 17, 0.612),
]

# setting, budget -> (optimum bits, reliability, halt step label)
OPTIMA = {
    ("A", 110): ("11111", 0.9417625, "By STEP 4"),
    ("A", 95): ("11011", 0.9220000, "By STEP 4"),
    ("A", 85): ("11011", 0.9220000, "By STEP 5"),
    ("A", 65): ("11010", 0.7600000, "By STEP 5"),
    ("A", 40): ("10010", 0.7600000, "By STEP 5"),
    ("B", 77): ("10111", 0.8811250, "By STEP 5"),
    ("C", 77): ("11110", 0.7906000, "By STEP 5"),
}
