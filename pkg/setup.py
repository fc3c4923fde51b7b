#!/usr/bin/env python

from setuptools import setup

setup(name='SomborAnalysis',
      version='0.1.0',
      description='greedy trees and the Sombor index of trees with a given degree sequence',
      packages=['SomborAnalysis', 'SomborAnalysis.decomposition',
                'SomborAnalysis.io'],
      python_requires='>=3.8',
      install_requires=['numpy', 'pandas', 'tqdm', 'networkx'],
      extras_require={'test': ['pytest', 'hypothesis']},
      entry_points={'console_scripts': ['sombor=SomborAnalysis.cli:main']},
     )
