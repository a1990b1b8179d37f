from hypothesis import strategies as st

from plethyx.shapes import Partition


@st.composite
def partitions_st(draw, max_size=6, max_len=None):
    size = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    rem, cap = size, size
    while rem:
        if max_len is not None and len(parts) == max_len:
            break
        x = draw(st.integers(min_value=1, max_value=min(rem, cap)))
        parts.append(x)
        rem -= x
        cap = x
    return Partition(parts)
