"""Builds the kacmod._kacmod extension directly from the C++ sources."""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

CORE_SOURCES = [
    "src/qcontext.cpp",
    "src/rational.cpp",
    "src/radical.cpp",
    "src/gzpattern.cpp",
    "src/evenaction.cpp",
    "src/induced.cpp",
    "src/typicality.cpp",
    "src/relations.cpp",
    "src/classical.cpp",
    "src/bundle.cpp",
]

ext = Pybind11Extension(
    "kacmod._kacmod",
    sources=["bindings/pykacmod.cpp", *CORE_SOURCES],
    include_dirs=["include", "vendor"],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(
    packages=["kacmod"],
    package_dir={"kacmod": "python/kacmod"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
