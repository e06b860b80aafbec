from setuptools import setup , find_packages

setup(
    name='ExtremeCouplings',
    version='0.1.0',
    packages=find_packages(),
    package_data={'coupling_config': ['coupling_config.json']},
    include_package_data=True,
)
