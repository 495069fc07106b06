from pybind11.setup_helpers import Pybind11Extension, ParallelCompile, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

core = [
    "field.cpp",
    "poly.cpp",
    "rank.cpp",
    "hk.cpp",
    "bracket.cpp",
    "formulas.cpp",
    "harness.cpp",
    "pairs.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "hklab._core",
            ["bindings/module.cpp"] + [f"src/{f}" for f in core],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
