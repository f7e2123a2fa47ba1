# coding: utf-8

# framer/util.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

import os
from dataclasses import fields
from threading import Lock, RLock

from decorator import decorator


class Registry(object):

    """Thread safe store of process wide settings.

       Lookup order for :meth:`get` is: explicit override, value assigned
       on the registry, ``FRAMER_<KEY>`` environment variable, installed
       default. Keys can be locked against further assignment.

       >>> registry.get('band_radius')
       0.2
       >>> registry.band_radius = 0.3
       >>> registry.get('band_radius', override=0.25)
       0.25
    """

    def __init__(self, defaults=None, environ=None):
        self.__dict__.update({
            '_Registry__lock': Lock(),
            '_Registry__locked': [],
            '_Registry__environ': environ,
            '_Registry__defaults': dict(defaults or {})})

    def _install_default(self, key, value):
        with self.__lock:
            self.__defaults[key] = value

    def _lock(self, key):
        with self.__lock:
            if key in self.__locked:
                msg = "Key '{0}' has been already locked"
                raise FramerException(msg.format(key))

            self.__locked.append(key)

    def _from_environ(self, key):
        environ = self.__environ
        if environ is None:
            environ = os.environ

        value = environ.get('FRAMER_' + key.upper())
        if value is None:
            return None

        default = self.__defaults.get(key)
        if isinstance(default, bool):
            return value.lower() in ('1', 'true', 'yes')
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float):
            return float(value)

        return value

    def get(self, key, value=None, override=None, lock=False):
        if lock:
            self._lock(key)

        if override is not None:
            return override

        if key in self.__dict__:
            with self.__lock:
                if key in self.__dict__:
                    return self.__dict__[key]

        from_environ = self._from_environ(key)
        if from_environ is not None:
            return from_environ

        if key in self.__defaults:
            with self.__lock:
                if key in self.__defaults:
                    return self.__defaults[key]

        return value

    def __getattr__(self, key):
        if key in self.__defaults:
            with self.__lock:
                if key in self.__defaults:
                    return self.__defaults[key]

        msg = '{0} object has no attribute {1}, neither found in defaults'
        raise AttributeError(msg.format(self.__class__, key))

    def __setattr__(self, key, value):
        with self.__lock:
            if key in self.__locked:
                msg = "Key '{0}' has been locked"
                raise FramerException(msg.format(key))

            self.__dict__[key] = value

    def __delattr__(self, key):
        with self.__lock:
            if key in self.__locked:
                msg = "Key '{0}' has been locked"
                raise FramerException(msg.format(key))

            del self.__dict__[key]


# memoized cache
__cache = {}


@decorator
def memoized(f, *args, **kw):
    """Decorator that caches a function's return value each time it is called.

    If called later with the same arguments, the cached value is returned, and
    not re-evaluated. This decorator performs proper synchronization to make it
    thread-safe. Arguments must be hashable; cached numpy arrays are
    expected to be marked read-only by the decorated function.
    """
    key = f, args, frozenset(kw.items())
    if key not in __cache:
        with __lock:
            if key not in __cache:
                __cache[key] = {'lock': RLock()}

    key_cache = __cache[key]
    if 'value' not in key_cache:
        with key_cache['lock']:
            if 'value' not in key_cache:
                info = key[0].__name__, key[1]
                logger.debug('Memoizing {0} args={1}'.format(*info))

                result = f(*args, **kw)

                key_cache['value'] = result
                logger.debug('Memoized {0} args={1}'.format(*info))

    return key_cache['value']

__lock = Lock()


class FramerException(Exception):
    pass


class ShapeException(FramerException):

    """Raised when array extents do not agree.

       The message always names both offending shapes.
    """

    def __init__(self, first, second, operation=None):
        self.shapes = tuple(first), tuple(second)
        template = 'Shape mismatch {0} vs {1}'
        msg = template.format(*self.shapes)
        if operation:
            msg = '{0}: {1}'.format(operation, msg)

        super(ShapeException, self).__init__(msg)


class DomainException(FramerException):
    pass


class ConfigException(FramerException):
    pass


class DataException(FramerException):
    pass


class TrainingException(FramerException):

    """Raised when training can not continue.

       :attr:`checkpoint` carries the manifest path of the last checkpoint
       written before the failure or ``None``.
    """

    def __init__(self, msg, step=None, checkpoint=None):
        super(TrainingException, self).__init__(msg)
        self.step = step
        self.checkpoint = checkpoint


class Section(object):

    """Mixin giving dataclasses dictionary conversion and validation.

       Nested sections are converted recursively. Unknown keys raise
       :class:`ConfigException` naming the offending key.
    """

    @classmethod
    def from_dict(cls, values=None, prefix=''):
        return cls().update(values, prefix)

    def update(self, values=None, prefix=''):
        """Override fields from a mapping and validate.

           Nested sections keep the values not mentioned in ``values``.
        """
        known = set(f.name for f in fields(self))

        for key, value in dict(values or {}).items():
            name = key.replace('-', '_')
            if name not in known:
                msg = "Unknown configuration key '{0}{1}'"
                raise ConfigException(msg.format(prefix, key))

            current = getattr(self, name)
            if isinstance(current, Section):
                if not isinstance(value, dict):
                    msg = "Configuration key '{0}{1}' expects a mapping"
                    raise ConfigException(msg.format(prefix, key))
                value = current.update(value, prefix + name + '.')
            elif isinstance(current, tuple) and isinstance(value, list):
                value = tuple(value)

            setattr(self, name, value)

        return self.validate()

    def to_dict(self):
        result = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Section):
                value = value.to_dict()
            elif isinstance(value, tuple):
                value = list(value)
            result[f.name] = value

        return result

    def validate(self):
        return self


def check_range(name, pair, lower=None, upper=None):
    """Validate a ``(lo, hi)`` pair is ordered and within bounds."""
    try:
        lo, hi = pair
    except (TypeError, ValueError):
        msg = "'{0}' must be a [lo, hi] pair, got {1}"
        raise ConfigException(msg.format(name, pair))

    if lo > hi:
        msg = "'{0}' range is not ordered: {1} > {2}"
        raise ConfigException(msg.format(name, lo, hi))
    if (lower is not None and lo < lower) or (upper is not None and
                                               hi > upper):
        msg = "'{0}' range {1} outside [{2}, {3}]"
        raise ConfigException(msg.format(name, pair, lower, upper))

    return (lo, hi)


def check_probability(name, value):
    if not 0 <= value <= 1:
        msg = "'{0}' must be a probability, got {1}"
        raise ConfigException(msg.format(name, value))

    return value


from framer import logger
