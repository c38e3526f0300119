"""The three enumeration backends must be indistinguishable."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from mwlattice import matrices as mx
from mwlattice.boxenum import box_short_vectors, enumeration_backend, set_backend
from mwlattice.errors import FormError
from mwlattice.lattice import short_vectors
from mwlattice.oracles import brute_force_short_vectors


def _available_backends():
    names = ["python", "numpy"]
    try:
        set_backend("compiled")
        names.append("compiled")
    except ValueError:
        pass
    finally:
        set_backend(None)
    return names


BACKENDS = _available_backends()


@pytest.fixture(autouse=True)
def _restore_backend():
    yield
    set_backend(None)


def _random_gram(rng, n):
    b = None
    while b is None or mx.det(b) == 0:
        b = tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n))
    return mx.matmul(b, mx.transpose(b))


def test_backends_agree_on_random_grams():
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randint(1, 4)
        gram = _random_gram(rng, n)
        bound = rng.randint(1, 6)
        results = {}
        for name in BACKENDS:
            set_backend(name)
            assert enumeration_backend() == name
            results[name] = box_short_vectors(gram, bound)
        first = results[BACKENDS[0]]
        for name in BACKENDS[1:]:
            assert results[name] == first, name


def test_backends_agree_on_rational_gram():
    gram = ((Fraction(1, 2), 0), (0, Fraction(3, 4)))
    expected = None
    for name in BACKENDS:
        set_backend(name)
        got = box_short_vectors(gram, 2)
        if expected is None:
            expected = got
        assert got == expected
    assert (1, 0) in expected and (0, 1) in expected


def test_box_matches_recursive_search():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(1, 4)
        gram = _random_gram(rng, n)
        bound = rng.randint(1, 5)
        assert box_short_vectors(gram, bound) == short_vectors(gram, bound)


def test_oracle_wrapper_matches():
    rng = random.Random(6)
    for _ in range(10):
        gram = _random_gram(rng, 3)
        assert brute_force_short_vectors(gram, 4) == short_vectors(gram, 4)
        assert brute_force_short_vectors(gram, 4, reduce=False) == short_vectors(
            gram, 4
        )


def test_box_rejects_bad_forms():
    with pytest.raises(FormError):
        box_short_vectors(((1, 1), (1, 1)), 2)
    with pytest.raises(FormError):
        box_short_vectors(((-1, 0), (0, 1)), 2)
    assert box_short_vectors((), 2) == ()
    assert box_short_vectors(((2,),), -1) == ()


def test_set_backend_validation():
    with pytest.raises(ValueError):
        set_backend("fortran")
    set_backend("python")
    assert enumeration_backend() == "python"
    set_backend(None)
    assert enumeration_backend() in ("compiled", "numpy", "python")


def test_large_entry_fallback_is_exact():
    # entries big enough to overflow the int64 precheck must still work
    big = 1 << 40
    gram = ((big, 0), (0, big))
    for name in BACKENDS:
        set_backend(name)
        assert box_short_vectors(gram, big) == ((-1, 0), (0, -1), (0, 1), (1, 0))


def test_extension_can_be_disabled():
    env = dict(os.environ, MWLATTICE_NO_EXT="1")
    env.pop("PYTHONPATH", None)
    out = subprocess.run(
        [sys.executable, "-c",
         "from mwlattice.boxenum import enumeration_backend;"
         "print(enumeration_backend())"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() in ("numpy", "python")
