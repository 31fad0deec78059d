from setuptools import setup, find_packages

setup(
    name="entrydeterrence",
    version="0.1.0",
    description="Entry deterrence with antibiotic resistance under Bertrand competition",
    author="Entry Deterrence Team",
    author_email="info@example.com",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy>=1.26",
        "pydantic>=2.4",
        "pyyaml>=6.0",
        "click>=8.0.0",
    ],
    extras_require={
        "test": ["pytest>=7.4", "hypothesis>=6.88"],
    },
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "entrydeterrence=entrydeterrence.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
    ],
)
