from hypothesis import strategies as st

from erdos.embedding import color_of
from erdos.models import Point
from exceptions import NoRelation
from ordinals.arithmetic import from_vector
from ordinals.models import Ordinal


def ordinals_below_omega_power(k=4, max_coefficient=5):
    return st.lists(st.integers(0, max_coefficient), min_size=k, max_size=k).map(from_vector)


# ординалы с бесконечными показателями: глубина depth по показателям
@st.composite
def ordinals(draw, depth=2):
    if depth == 0:
        return Ordinal.of(draw(st.integers(0, 9)))
    exponents = draw(st.lists(ordinals(depth - 1), max_size=3, unique=True))
    terms = tuple((exponent, draw(st.integers(1, 5))) for exponent in sorted(exponents, reverse=True))
    return Ordinal(terms)


# ординал строго меньше ненулевого bound: меньший коэффициент на одной позиции, хвост ниже ее показателя
@st.composite
def ordinals_below(draw, bound):
    position = draw(st.integers(0, len(bound.terms) - 1))
    exponent, coefficient = bound.terms[position]
    terms = list(bound.terms[:position])
    kept = draw(st.integers(0, coefficient - 1))
    if kept:
        terms.append((exponent, kept))
    if not exponent.is_zero and draw(st.booleans()):
        terms.append((draw(ordinals_below(exponent)), draw(st.integers(1, 5))))
    return Ordinal(tuple(terms))


def points(k, max_coord=8):
    return st.tuples(*[st.integers(0, max_coord)] * k).map(Point)


def _below_all(point, earlier):
    try:
        for previous in earlier:
            color_of(point, previous)
    except NoRelation:
        return False
    return True


# однородная последовательность: кандидаты, несравнимые с предыдущими, отбрасываются
@st.composite
def homogeneous_sequences(draw, k, max_coord=8, max_size=10):
    candidates = draw(st.lists(points(k, max_coord), min_size=1, max_size=max_size))
    sequence = []
    for point in candidates:
        if _below_all(point, sequence):
            sequence.append(point)
    return sequence
