from setuptools import find_packages, setup

# read the contents of README file
from os import path
from io import open

this_directory = path.abspath(path.dirname(__file__))


# read the contents of README.rst
def readme():
    with open(path.join(this_directory, "README.rst"), encoding="utf-8") as f:
        return f.read()


# read the contents of requirements.txt
with open(path.join(this_directory, "requirements.txt"), encoding="utf-8") as f:
    requirements = f.read().splitlines()

VERSION = "0.3.0"

setup(
    name="qhopf",
    version=VERSION,
    description="Exact computations on the quantum Hopf fibration SU_q(2) -> S^2_q",
    long_description=readme(),
    long_description_content_type="text/x-rst",
    keywords=[
        "quantum groups",
        "noncommutative geometry",
        "computer algebra",
        "Hopf algebras",
        "Yang-Mills",
        "spectral theory",
    ],
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    package_data={"qhopf": ["configs/*.yaml", "unittests/golden/*.csv"]},
    install_requires=requirements,
    setup_requires=["setuptools>=38.6.0"],
    entry_points={"console_scripts": ["qhopf=qhopf.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3.9",
    ],
)
