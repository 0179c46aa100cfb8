import random

import pytest

from tempered_kit import _kernels, _pykernels
from tempered_kit.census import _natural_posets, _up_from_down

ckernels = pytest.importorskip("tempered_kit._ckernels")


def test_backend_selected():
    assert _kernels.BACKEND == "cython"


def test_backends_agree_on_all_five_point_orders():
    n = 5
    for down in _natural_posets(n):
        up = _up_from_down(down)
        a_py, perms_py = _pykernels.minimal_order_code(n, up)
        a_c, perms_c = ckernels.minimal_order_code(n, up)
        assert a_py == a_c
        assert sorted(map(tuple, perms_py)) == sorted(map(tuple, perms_c))
        assert _pykernels.minimal_temperature_codes(n, perms_py) == ckernels.minimal_temperature_codes(n, perms_c)


def test_backends_agree_on_extensions():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 7)
        downs = _natural_posets(n) if n <= 4 else None
        if downs:
            down = rng.choice(downs)
        else:
            down = tuple(rng.getrandbits(k) for k in range(n))
            # make the relation transitive
            down = list(down)
            for k in range(n):
                for i in range(k):
                    if down[k] >> i & 1:
                        down[k] |= down[i]
            down = tuple(down)
        up = _up_from_down(down)
        assert sorted(map(tuple, _pykernels.linear_extensions(n, up))) == sorted(
            map(tuple, ckernels.linear_extensions(n, up))
        )


def test_large_posets_use_python(monkeypatch):
    assert _kernels._pick(12) is _pykernels
