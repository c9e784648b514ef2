from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "afercodes._core",
    sorted(
        [
            "src/gf.cpp",
            "src/bounds_core.cpp",
            "src/linear_codes.cpp",
            "src/projective_geometry.cpp",
            "src/code_db.cpp",
            "src/bound_engine.cpp",
            "python/module.cpp",
        ]
    ),
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
