#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Registry is central source of truth in sbmlab.

Registry maintains mappings of various information to unique keys. Special
functions in registry can be used as decorators to register different kind of
classes.

Import the global registry object using

.. code:: py

    from sbmlab.core.registry import registry

Various decorators for registry different kind of classes with unique keys

-   Register a modularity null model: ``@registry.register_null_model``
"""

import collections
from typing import Any, Callable, DefaultDict, Optional, Type

from sbmlab.core.utils import Singleton


class Registry(metaclass=Singleton):
    mapping: DefaultDict[str, Any] = collections.defaultdict(dict)

    @classmethod
    def _register_impl(
        cls,
        _type: str,
        to_register: Optional[Any],
        name: Optional[str],
        assert_type: Optional[Type] = None,
    ) -> Callable:
        def wrap(to_register):
            if assert_type is not None:
                assert issubclass(
                    to_register, assert_type
                ), "{} must be a subclass of {}".format(
                    to_register, assert_type
                )
            register_name = to_register.__name__ if name is None else name

            cls.mapping[_type][register_name] = to_register
            return to_register

        if to_register is None:
            return wrap
        else:
            return wrap(to_register)

    @classmethod
    def register_null_model(
        cls, to_register=None, *, name: Optional[str] = None
    ):
        r"""Register a modularity operator for a null model with key
        :p:`name`.

        :param name: Key with which the null model will be registered.
            If :py:`None` will use the name of the class

        .. code:: py

            from sbmlab.core.registry import registry
            from sbmlab.linalg.operators import GraphOperator

            @registry.register_null_model(name="my_null")
            class MyModularityOperator(GraphOperator):
                pass

        """
        from sbmlab.linalg.operators import GraphOperator

        return cls._register_impl(
            "null_model", to_register, name, assert_type=GraphOperator
        )

    @classmethod
    def _get_impl(cls, _type: str, name: str) -> Type:
        return cls.mapping[_type].get(name, None)

    @classmethod
    def get_null_model(cls, name: str) -> Type:
        return cls._get_impl("null_model", name)


registry = Registry()
