from setuptools import find_packages, setup

setup(
    name="multiplex-juggling",
    version="0.2.0",
    packages=find_packages(include=["src", "src.*"]),
    package_data={"src": ["config/*.yaml"]},
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=[
        "python-dotenv>=1.0",
        "pydantic>=2.5",
        "pydantic-settings>=2.1",
        "pyyaml>=6.0",
        "psutil>=5.9",
        "pandas>=2.1",
        "numpy>=1.26",
        "sympy>=1.12",
        "loguru>=0.7",
    ],
    entry_points={"console_scripts": ["mjuggle = src.cli:main"]},
)
