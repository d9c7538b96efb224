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

"""Makes the package importable from a plain CMake build tree.

If ``chancomp`` is already installed (wheel or editable), nothing happens.
Otherwise the repository's ``python/`` directory and the extension from the
build tree (``CHANCOMP_BUILD_DIR``, default ``<repo>/build``) are put on
``sys.path``.
"""

import os
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[2]

try:
    import chancomp  # noqa: F401
except ImportError:
    build_dir = Path(os.environ.get("CHANCOMP_BUILD_DIR", REPO / "build"))
    sys.path.insert(0, str(REPO / "python"))
    sys.path.insert(0, str(build_dir))
