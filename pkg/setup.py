import setuptools

with open("requirements.txt", "r") as reqs_f:
    requirements = reqs_f.read().split()

setuptools.setup(
    name="cvqss",
    version="0.0.1",
    description="Continuous-variable quantum secret sharing with random passive interferometers.",
    packages=setuptools.find_packages(exclude=["tests"]),
    install_requires=requirements,
    extras_require={"test": ["pytest", "hypothesis"]},
    scripts=["scripts/write_fixtures.sh"],
    entry_points={
        "console_scripts": [
            "cvqss=cvqss.cli:main",
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3.7",
        "Operating System :: POSIX :: Linux",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
