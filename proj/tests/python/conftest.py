import os
import sys

_path = os.environ.get("RCAG_PYTHONPATH")
if _path:
    sys.path.insert(0, _path)
