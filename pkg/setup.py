from setuptools import find_packages, setup

setup(
    name='logres',
    version='0.1.0',
    license='GPL v3',
    packages=find_packages(exclude=['tests', 'tests.*', 'example', 'example.*']),
    description='Logarithmic residues, freeness and normal crossing tests for '
                'hypersurface germs',
    install_requires=['six', 'lazy_object_proxy', 'sympy'],
    entry_points={
        'console_scripts': ['logres = logres.management_commands:main'],
    },
    keywords=['computer algebra', 'singularities', 'free divisors', 'logarithmic residues',
              'standard basis', 'groebner', 'puiseux'],
)
