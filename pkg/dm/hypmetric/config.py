# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Schema configured parameter objects.

The parameters are described by the schemas in `interfaces`;
each class lists its schemas in `SC_SCHEMAS`. Attribute assignments
are validated against the schema fields.
"""
from zope.interface import implementer
from zope.schema import getFieldsInOrder
from zope.schema.fieldproperty import FieldProperty

from .interfaces import ISupSearchConfig, IGeodesicConfig, ITraceConfig, \
     IRunConfig


def _properties(schema):
  return dict((name, FieldProperty(schema[name]))
              for name, _ in getFieldsInOrder(schema))


class SchemaConfigured(object):
  """Base class for objects configured by keyword parameters.

  Unspecified parameters get the field default; unknown
  parameters are rejected.
  """
  SC_SCHEMAS = ()

  def __init__(self, **kw):
    for schema in self.SC_SCHEMAS:
      for name, field in getFieldsInOrder(schema):
        if name in kw: setattr(self, name, kw.pop(name))
    if kw:
      raise TypeError("unknown parameters: %s" % ", ".join(sorted(kw)))

  def replace(self, **kw):
    """a copy of this configuration with the parameters in *kw* changed."""
    params = self.as_dict(); params.update(kw)
    return self.__class__(**params)

  def as_dict(self):
    return dict((name, getattr(self, name))
                for schema in self.SC_SCHEMAS
                for name, _ in getFieldsInOrder(schema))

  def __repr__(self):
    return "%s(%s)" % (
      self.__class__.__name__,
      ", ".join("%s=%r" % item for item in sorted(self.as_dict().items()))
      )

  def __eq__(self, other):
    return self.__class__ is other.__class__ and self.as_dict() == other.as_dict()

  def __ne__(self, other): return not self == other

  __hash__ = None


def _configured(schema):
  """class decorator installing a `FieldProperty` for each field of *schema*."""
  def install(cls):
    for name, prop in _properties(schema).items(): setattr(cls, name, prop)
    return implementer(schema)(cls)
  return install


@_configured(ISupSearchConfig)
class SupSearchConfig(SchemaConfigured):
  SC_SCHEMAS = (ISupSearchConfig,)


@_configured(IGeodesicConfig)
class GeodesicConfig(SchemaConfigured):
  SC_SCHEMAS = (IGeodesicConfig,)


@_configured(ITraceConfig)
class TraceConfig(SchemaConfigured):
  SC_SCHEMAS = (ITraceConfig,)


@_configured(IRunConfig)
class RunConfig(SchemaConfigured):
  SC_SCHEMAS = (IRunConfig,)
