import os
import sys

# When run from the build tree, import the staged module rather than any
# editable install of the same package.
if os.environ.get("LOMMELQ_EXPECT_STAGED"):
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.modules.pop("lommelq", None)
