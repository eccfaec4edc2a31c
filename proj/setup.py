import os
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
        out = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / ext.name
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DBRACEFORGE_PYTHON=ON",
        ]
        src = Path(__file__).resolve().parent
        subprocess.run(["cmake", str(src)] + args, cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_braceforge",
             "-j", str(os.cpu_count() or 2)],
            cwd=build_dir, check=True)


setup(
    packages=["braceforge"],
    package_dir={"braceforge": "python/braceforge"},
    ext_modules=[CMakeExtension("braceforge._braceforge")],
    cmdclass={"build_ext": CMakeBuild},
)
