from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()

long_description = (here / "README.md").read_text(encoding="utf-8")

setup(
    name="cubing-toolkit",
    version="1.0.0",
    description="Combinatorial geometry of CAT(0) cube complexes: hyperplanes, geodesics, subdivision, automorphism classification and wallspace cubulation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main"],
    install_requires=[
        "networkx==3.2.1",
        "PyYAML==6.0.1",
    ],
    extras_require={
        "test": ["pytest==8.0.0"],
    },
    entry_points={
        "console_scripts": [
            "ccx=main:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: ISC License (ISCL)",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
)
