# Copyright 2026 chancomp contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Certified Lipschitz complexity of finite-dimensional quantum channels."""

try:
    # installed layout: the extension lives inside the package
    from ._chancomp import *  # noqa: F401,F403
except ImportError:
    # development layout: the extension sits on sys.path (e.g. the CMake
    # build directory)
    from _chancomp import *  # noqa: F401,F403

__version__ = "1.0.0"
