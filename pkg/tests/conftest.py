import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from wordmaps.words import Word, commutator  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

exponents = st.integers(-3, 3).filter(bool)


def words(n: int = 2, max_syllables: int = 8):
    syl = st.lists(st.tuples(st.integers(1, n), exponents), max_size=max_syllables)
    return syl.map(lambda s: Word.reduce(n, s))


def f1_words(max_syllables: int = 4, max_factors: int = 2):
    """Products of commutators, hence words with all exponent sums zero."""
    pair = st.tuples(words(2, max_syllables), words(2, max_syllables))

    def build(pairs):
        out = Word.identity(2)
        for u, v in pairs:
            out = out * commutator(u, v)
        return out

    return st.lists(pair, min_size=1, max_size=max_factors).map(build)


def f2_words(max_syllables: int = 3):
    """[[u1, u2], [u3, u4]], which lies in the second derived subgroup."""
    w = words(2, max_syllables)
    return st.tuples(w, w, w, w).map(lambda t: commutator(commutator(t[0], t[1]), commutator(t[2], t[3])))
