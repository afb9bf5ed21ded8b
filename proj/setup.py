from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ucsc._ucsc",
    [
        "src/family.cpp",
        "src/checkers.cpp",
        "src/enumeration.cpp",
        "src/search.cpp",
        "src/json_io.cpp",
        "src/python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
