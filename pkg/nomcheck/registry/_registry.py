#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import importlib
import re
from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import Callable
from typing import Dict
from typing import Generic
from typing import Iterator
from typing import List
from typing import MutableMapping
from typing import NoReturn
from typing import Tuple
from typing import TypeVar
from typing import Union


V = TypeVar('V')
AliasesHint = Union[str, Tuple[str, ...]]


# ========================================================================= #
# Imports                                                                   #
# ========================================================================= #


def import_obj(import_path: str) -> Any:
    """
    Import `module.attr` from a dotted path.
    """
    module_path, _, attr_name = import_path.rpartition('.')
    if not module_path or not all(map(str.isidentifier, import_path.split('.'))):
        raise ValueError(f'invalid import path: {repr(import_path)}')
    try:
        obj = getattr(importlib.import_module(module_path), attr_name)
    except (ImportError, AttributeError) as e:
        raise ImportError(f'cannot import: {repr(attr_name)} from: {repr(module_path)}') from e
    return obj


# ========================================================================= #
# Provided Values                                                           #
# ========================================================================= #


class ProvidedValue(Generic[V], ABC):
    """
    A registry entry, the value is only produced by `get`.
    """

    @abstractmethod
    def get(self) -> V:
        ...


_UNSET = object()


class LazyValue(ProvidedValue[V]):
    """
    Compute a value on first access and keep it,
    models are only parsed once they are requested.
    """

    def __init__(self, make_fn: Callable[[], V]):
        if not callable(make_fn):
            raise TypeError(f'lazy values need a callable, got: {repr(make_fn)}')
        self._make_fn = make_fn
        self._cached = _UNSET

    def get(self) -> V:
        if self._cached is _UNSET:
            self._cached = self._make_fn()
        return self._cached

    def clear(self):
        self._cached = _UNSET

    def __repr__(self):
        return f'{type(self).__name__}({self._make_fn!r})'


class LazyImport(LazyValue[V]):

    def __init__(self, import_path: str):
        super().__init__(lambda: import_obj(import_path))
        self.import_path = import_path

    def __repr__(self):
        return f'LazyImport({self.import_path!r})'


# ========================================================================= #
# Registry                                                                  #
# ========================================================================= #


class Registry(MutableMapping[str, V]):
    """
    Named entries resolved on access. Keys are identifiers, one entry
    may have several aliases, and entries are never replaced or removed.
    """

    def __init__(self, name: str):
        if not name.isidentifier():
            raise ValueError(f'registry names must be identifiers, got: {repr(name)}')
        self.name = name
        self._entries: Dict[str, ProvidedValue[V]] = {}

    @property
    def examples(self) -> List[str]:
        return list(self._entries)

    def __repr__(self):
        return f'{type(self).__name__}({self.name})'

    def __getitem__(self, k: str) -> V:
        try:
            entry = self._entries[k]
        except KeyError:
            raise KeyError(f'{self.name} has no entry: {repr(k)}, choose from: {sorted(self._entries)}') from None
        return entry.get()

    def __setitem__(self, aliases: AliasesHint, v: ProvidedValue[V]) -> NoReturn:
        if isinstance(aliases, str):
            aliases = (aliases,)
        if not (isinstance(aliases, tuple) and aliases):
            raise TypeError(f'{self.name} keys must be a str or a non-empty tuple of str, got: {repr(aliases)}')
        if not isinstance(v, ProvidedValue):
            raise TypeError(f'{self.name} values must be instances of {ProvidedValue.__name__}, got: {repr(v)}')
        for k in aliases:
            if not (isinstance(k, str) and k.isidentifier()):
                raise ValueError(f'{self.name} keys must be identifiers, got: {repr(k)}')
            if k in self._entries:
                raise RuntimeError(f'{self.name} refuses to overwrite the entry: {repr(k)}')
        self._entries.update((k, v) for k in aliases)

    def __delitem__(self, k: str) -> NoReturn:
        raise RuntimeError(f'{self.name} does not support deletion, tried to remove: {repr(k)}')

    def __contains__(self, k) -> bool:
        return k in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)


class RegexRegistry(Registry[V]):
    """
    Keys that are not entries are matched against patterns in order of
    registration, the groups of the first match are passed to its factory.
    """

    def __init__(self, name: str):
        super().__init__(name)
        self._patterns: List[Tuple[re.Pattern, str, Callable[..., V]]] = []

    def register_regex(self, pattern: Union[str, re.Pattern], example: str, factory_fn: Callable[..., V]):
        pattern = re.compile(pattern)
        if not pattern.groups:
            raise ValueError(f'{self.name} patterns need at least one group, got: {repr(pattern.pattern)}')
        if not pattern.search(example):
            raise ValueError(f'{self.name} could not match example: {repr(example)} with: {repr(pattern.pattern)}')
        self._patterns.append((pattern, example, factory_fn))

    @property
    def examples(self) -> List[str]:
        return super().examples + [example for _, example, _ in self._patterns]

    def can_construct(self, k: str) -> bool:
        return any(pattern.search(k) for pattern, _, _ in self._patterns)

    def __getitem__(self, k: str) -> V:
        if k in self._entries:
            return self._entries[k].get()
        for pattern, _, factory_fn in self._patterns:
            match = pattern.search(k)
            if match:
                return factory_fn(*match.groups())
        raise KeyError(f'{self.name} cannot construct an entry from: {repr(k)}, examples are: {self.examples}')


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
