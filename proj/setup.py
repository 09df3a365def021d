"""Build the _core extension through the project's CMake tree.

The wheel contains python/detdecomp plus the compiled module; CMake is
configured with tests and the CLI off and told to drop the library next to
the package sources setuptools is copying.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DDETDECOMP_BUILD_CLI=OFF",
                "-DDETDECOMP_BUILD_TESTS=OFF",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )


setup(
    packages=["detdecomp"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("detdecomp._core")],
    cmdclass={"build_ext": CMakeBuild},
)
