import setuptools

with open('VERSION.txt', 'r') as f:
    version = f.read().strip()

with open('requirements.txt', 'r') as f:
    install_requires = [
        line.strip() for line in f if line.strip() and not line.startswith('#')
    ]

setuptools.setup(
    name="holonomy-cert",
    description="Exact certificates for the SL(2) character variety of m137 "
    "and its Dehn fillings",
    version=version,
    license="AGPL-3.0-or-later",
    python_requires=">=3.9",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    package_data={"": ["__manifest__.py", "README.rst", "readme/*.rst"]},
    install_requires=install_requires,
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={
        "console_scripts": ["holonomy-cert = holonomy_cert.cli:main"],
    },
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
