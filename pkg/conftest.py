# Honour zope.testrunner style ``layer`` attributes when running under pytest.
import pytest


def _layer_chain(layer):
  chain = []
  for base in getattr(layer, "__bases__", ()):
    if base is not object:
      chain.extend(_layer_chain(base))
  chain.append(layer)
  return chain


@pytest.fixture(autouse=True, scope="class")
def _zope_layer(request):
  layer = getattr(request.cls, "layer", None) if request.cls is not None else None
  if layer is None:
    yield
    return
  chain = _layer_chain(layer)
  done = []
  try:
    for l in chain:
      if "setUp" in vars(l):
        l.setUp()
      done.append(l)
    yield
  finally:
    for l in reversed(done):
      if "tearDown" in vars(l):
        l.tearDown()
