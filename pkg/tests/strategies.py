"""Random valid wirings for property tests.

A wiring starts as the full twist, is shuffled by braid moves (commuting
far-apart swaps and triangle flips) and then has random digons contracted
to touches.  Every step keeps the wiring valid.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from pseudocircles import wiring as wir
from pseudocircles.arrangement import CROSS, TOUCH


def full_twist(n: int) -> list[tuple[int, str]]:
    half = [(s, CROSS) for i in range(n - 1) for s in range(n - 1 - i)]
    return half + half


def braid_move(word: list, rng: random.Random) -> list:
    L = len(word)
    if L < 3:
        return word
    i = rng.randrange(L)
    w = word[i:] + word[:i]
    (a, ka), (b, kb), (c, kc) = w[0], w[1], w[2]
    if abs(a - b) >= 2:
        w[0], w[1] = w[1], w[0]
    elif ka == kb == kc == CROSS and a == c and abs(a - b) == 1:
        w[0], w[1], w[2] = (b, CROSS), (a, CROSS), (b, CROSS)
    return w


def contract_random_digon(word: list, rng: random.Random) -> list:
    L = len(word)
    spots = []
    for i, (s, k) in enumerate(word):
        if k != CROSS:
            continue
        j = (i + 1) % L
        while word[j][0] != s and abs(word[j][0] - s) != 1:
            j = (j + 1) % L
        if j != i and word[j] == (s, CROSS):
            spots.append((i, j))
    if not spots:
        return word
    i, j = rng.choice(spots)
    out = list(word)
    out[i] = (out[i][0], TOUCH)
    del out[j]
    return out


def random_annular(n: int, rng: random.Random, touch_rate: float = 0.3,
                   moves: int = 200) -> wir.AnnularWiring:
    word = full_twist(n)
    for _ in range(moves):
        word = braid_move(word, rng)
    for _ in range(n * n):
        if rng.random() < touch_rate:
            word = contract_random_digon(word, rng)
    return wir.AnnularWiring(n, tuple(word))


@st.composite
def annular_wirings(draw, min_n: int = 2, max_n: int = 7, touch_rate=None):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rate = draw(st.sampled_from([0.0, 0.3, 0.8])) if touch_rate is None else touch_rate
    return random_annular(n, random.Random(seed), rate)
