# -*- coding: utf-8 -*-

"""setup.py: setuptools control for resilient-qss."""

from setuptools import setup, find_packages
import re

version = re.search(
        r'^__version__\s*=\s*"(.*)"',
        open('resqss/__init__.py').read(),
        re.M
    ).group(1)

with open("README.md", "rb") as f:
    long_descr = f.read().decode("utf-8")

setup(
      license="MIT",
      name="resilient-qss",
      packages=find_packages(exclude=["notebooks", "tests"]),
      install_requires=[
        'numpy', 'pandas', 'scipy', 'tqdm'
      ],
      extras_require={
        'test': ['pytest'],
      },
      entry_points={
        'console_scripts': ['resqss = resqss.cli.main:main'],
      },
      python_requires=">=3.8",
      include_package_data=True,
      version=version,
      description="State-vector simulation and verification of a resilient three-party quantum secret sharing protocol",
      long_description=long_descr,
      long_description_content_type='text/markdown',
      author="resilient-qss developers",
    )
