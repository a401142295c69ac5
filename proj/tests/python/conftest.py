import os
import sys

# ctest points this at the module built alongside the C++ tests; an
# editable install would otherwise shadow it.
pkg = os.environ.get("SATOPO_PYPKG")
if pkg:
    sys.meta_path[:] = [f for f in sys.meta_path if "Redirecting" not in type(f).__name__]
    sys.path.insert(0, pkg)
    for name in [m for m in sys.modules if m == "satopo" or m.startswith("satopo.")]:
        del sys.modules[name]
