from setuptools import setup, find_packages

# Read the README file for long description
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

# Core dependencies - numerics, validation, settings, logging and the command line
CORE_DEPS = [
    "numpy>=1.21.0",
    "scipy>=1.9.0",
    "pydantic>=2.0.0",
    "pydantic-settings>=2.0.0",
    "python-dotenv>=1.0.0",
    "structlog>=23.1.0",
    "click>=8.1.0",
    "typing-extensions>=4.5.0",
]

# Development dependencies
DEV_DEPS = [
    "black>=23.7.0",
    "flake8>=6.0.0",
    "mypy>=1.4.1",
    "isort>=5.12.0",
    "pre-commit>=3.3.3",
    "ipython>=8.14.0",
]

# Testing dependencies
TEST_DEPS = [
    "pytest>=7.4.0",
    "pytest-cov>=4.1.0",
    "pytest-xdist>=3.3.1",
    "coverage>=7.3.0",
    "pytest-benchmark>=4.0.0",
    "pytest-timeout>=2.2.0",
    "hypothesis>=6.80.0",
]

setup(
    name="apstrip",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=CORE_DEPS,
    extras_require={
        "dev": DEV_DEPS + TEST_DEPS,
        "test": TEST_DEPS,
        "all": DEV_DEPS + TEST_DEPS,
    },
    description="Finite-window metrics, Bochner-Fejer approximation and separation experiments "
                "for almost periodic functions in a strip",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "apstrip=apstrip.cli:main",
        ],
    },
)
