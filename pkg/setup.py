#!/usr/bin/env python

import os
from setuptools import setup, find_packages  # type: ignore

here = os.path.abspath(os.path.dirname(__file__))

# To update the package version number, edit __version__.py
version = {}
with open(os.path.join(here, 'src', 'fiasco', '_version.py')) as f:
    exec(f.read(), version)

with open("README.md") as readme_file:
    readme = readme_file.read()

setup(
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
    ],
    description="Few-shot incremental learning with active class selection "
                "in a gridworld agent simulator",
    install_requires=[
        "click >= 7.0, <9",
        "numpy >= 1.19, <2",
        "pandas >= 1.0.5, <2",
        "pydantic >= 1.7, <2",
        "PyYAML >= 5.4, <7",
        "scikit-learn >= 0.24, <2",
    ],
    entry_points={
        "console_scripts": ["fiasco=fiasco.cli:main"],
    },
    long_description=readme,
    long_description_content_type="text/markdown",
    package_data={"fiasco": ["py.typed"]},
    include_package_data=True,
    keywords="fiasco incremental-learning active-class-selection",
    name="fiasco",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    extras_require={
        "TEST": ["pytest", "pytest-cov", "nox", "flake8"],
    },
    version=version['__version__'],
    zip_safe=False,
)
