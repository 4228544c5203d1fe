# pylint: disable=E0602

import os.path as osp
import io
import shutil

from setuptools import setup, find_packages

from setuptools.command.develop import develop
from setuptools.command.install import install

# globals
PACKAGE     = "nlsid"
SRCDIR      = "src"

def read(path, encoding = None):
    with io.open(path, encoding = encoding) as f:
        content = f.read()

    return content

def _requirement(line):
    # pip-style VCS urls become PEP 508 direct references
    if line.startswith("git+") and "#egg=" in line:
        url, name = line.split("#egg=")
        line      = "%s @ %s" % (name.strip(), url)

    return line

def get_requirements(path):
    lines = [line.strip() for line in read(osp.realpath(path)).splitlines()]
    return [_requirement(line) for line in lines if line and not line.startswith(("#", "-r"))]

def get_package_info():
    attr = osp.abspath(osp.join(SRCDIR, PACKAGE, "__attr__.py"))
    info = dict(__file__ = attr)

    exec(read(attr), info)

    return info

PKGINFO      = get_package_info()

PRODUCTION   = get_requirements("requirements/production.txt")
DEVELOPMENT  = [r for r in get_requirements("requirements-dev.txt") if r not in PRODUCTION]

def remove_cache():
    path = osp.join(osp.expanduser("~"), ".config", PKGINFO["__name__"])

    if osp.exists(path):
        shutil.rmtree(path)

class DevelopCommand(develop):
    def run(self):
        develop.run(self)
        remove_cache()

class InstallCommand(install):
    def run(self):
        install.run(self)
        remove_cache()

metadata = dict(
    name                 = PKGINFO["__name__"],
    version              = PKGINFO["__version__"],
    url                  = PKGINFO["__url__"],
    author               = PKGINFO["__author__"],
    author_email         = PKGINFO["__email__"],
    description          = PKGINFO["__description__"],
    long_description     = read("README.md", encoding = "utf8"),
    long_description_content_type = "text/markdown",
    license              = PKGINFO["__license__"],
    keywords             = " ".join(PKGINFO["__keywords__"]),
    packages             = find_packages(where = SRCDIR),
    package_dir          = { "": SRCDIR },
    package_data         = { PACKAGE: ["VERSION", "data/configs/*.json", "data/templates/*.md"] },
    zip_safe             = False,
    python_requires      = ">=3.7",

    entry_points         = {
        "console_scripts": [
            "%s = %s.__main__:main" % (PKGINFO["__command__"], PACKAGE)
        ]
    },

    install_requires     = PRODUCTION,
    extras_require       = dict(
        dev = DEVELOPMENT
    ),
    include_package_data = True,
    classifiers          = [
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",

        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Physics"
    ],
    cmdclass = {
        "install": InstallCommand,
        "develop": DevelopCommand
    }
)

setup(**metadata)
