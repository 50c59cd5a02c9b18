from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="zetaform",
    version="0.1.0",
    author="zetaform contributors",
    description="zetaform - exact linear forms in zeta values from integrals over the unit cube",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["zetaform", "zetaform.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "mpmath>=1.3.0",
        "pydantic>=2.0.0",
        "pyyaml>=6.0",
        "rich>=13.0.0",
        "typer>=0.12.0",
    ],
    extras_require={
        "dev": ["pytest>=7.0", "hypothesis>=6.0", "black>=23.0", "flake8>=6.0", "mypy>=1.0", "pre-commit>=3.0"],
    },
    entry_points={
        "console_scripts": [
            "zetaform=zetaform.__main__:main",
        ],
    },
)
