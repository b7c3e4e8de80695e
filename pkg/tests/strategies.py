from hypothesis import strategies as st

from pompeiu.algebra import GroupRingElement
from pompeiu.groups import Subset, cyclic, dihedral, direct_product, quaternion8, symmetric
from pompeiu.scalar import Scalar

GROUPS = [cyclic(1), cyclic(4), cyclic(7), dihedral(3), dihedral(5), symmetric(3), symmetric(4),
          quaternion8(), direct_product(cyclic(2), cyclic(4))]

small_ints = st.integers(-4, 4)
gaussian = st.builds(Scalar, small_ints, small_ints)
groups = st.sampled_from(GROUPS)


def elements(G, complex_coeffs=True):
    coeff = gaussian if complex_coeffs else st.builds(Scalar, small_ints)
    return st.dictionaries(st.integers(0, G.order - 1), coeff, max_size=min(G.order, 8)).map(
        lambda d: GroupRingElement(G, d))


def indices(G):
    return st.integers(0, G.order - 1)


def subsets(G, min_size=1):
    return st.sets(st.integers(0, G.order - 1), min_size=min_size, max_size=G.order).map(
        lambda s: Subset(G, tuple(sorted(s))))
