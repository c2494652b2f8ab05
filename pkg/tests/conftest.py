import functools

import pytest

from hopfcat import gallery


@functools.lru_cache(maxsize=None)
def cached(name):
    return gallery.fixture(name)


@pytest.fixture(params=gallery.HOPF_FIXTURES)
def hopf_data(request):
    return cached(request.param)


@pytest.fixture(params=sorted(gallery.FIXTURES))
def any_data(request):
    return cached(request.param)
