# coding: utf-8

# framer/lazyenum.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Small validated enumerations used for configuration toggles.

   >>> teachers = enum('teacher', ('final', 'final_1', 'final_2', 'random'))
   >>> teachers.final
   framer.lazyenum.enum('teacher').final
   >>> teachers.cast('final-1') == 'final_1'
   True
"""

from six import string_types


def _normalize(name):
    return name.strip().lower().replace('-', '_')


class Enum(object):
    def __init__(self, name, values):
        self.name = name
        self.values = values

    def __getattr__(self, name):
        if name.startswith('__'):
            raise AttributeError(name)

        return self.cast(name)

    def __iter__(self):
        return iter([enum_value(self, value) for value in self.values])

    def __contains__(self, name):
        try:
            self.cast(name)
        except CastException:
            return False

        return True

    def cast(self, name):
        return cast(self, name)

    def __str__(self):
        return self.name

    def __repr__(self):
        return "framer.lazyenum.enum('{0}')".format(self.name)


class EnumValue(object):
    def __init__(self, enum, name):
        self.enum = enum
        self.name = name

    def __str__(self):
        return self.name

    def __repr__(self):
        return repr(self.enum) + '.' + self.name

    def __eq__(self, other):
        try:
            other = self.enum.cast(other)
        except CastException:
            return False

        return self is other

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.enum.name, self.name))

from framer.util import memoized


@memoized
def enum(name, values):
    return Enum(name, tuple(values))


@memoized
def enum_value(enum, name):
    return EnumValue(enum, name)


def cast(enum_, name):
    if not isinstance(enum_, Enum):
        msg = 'Cannot cast {0} to Enum'
        raise CastException(msg.format(enum_))

    if isinstance(name, EnumValue):
        if name.enum is not enum_:
            msg = 'Attempted to cast {0} to unrelated Enum {1}'
            raise CastException(msg.format(str(name), str(enum_)))

        return name
    elif isinstance(name, string_types):
        normalized = _normalize(name)
        if normalized not in enum_.values:
            msg = "'{0}' is not a valid {1}, expected one of: {2}"
            raise CastException(msg.format(name, enum_.name,
                                           ', '.join(enum_.values)))

        return enum_value(enum_, normalized)
    else:
        msg = 'Cannot cast {0} to EnumValue with Enum {1}'
        raise CastException(msg.format(repr(name), str(enum_)))

from framer.util import ConfigException


class CastException(ConfigException):
    pass
