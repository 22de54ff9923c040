# Copyright 2026 The SwissCheese Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Python front end for the swisscheese C++ core."""

from ._swisscheese import *  # noqa: F401,F403
from ._swisscheese import CheeseError

__all__ = [name for name in dir() if not name.startswith("_")]


def error_code(exc: CheeseError) -> str:
    """Machine-readable code carried by a CheeseError."""
    return getattr(exc, "code", "")
