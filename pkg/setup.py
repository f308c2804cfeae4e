from setuptools import setup

import qkdleak

__author__ = 'qkdleak developers'

with open('README.rst') as f:
    readme = f.read()
with open('requirements.txt') as f:
    requires = [line.strip() for line in f if line.strip()]

packages = ['qkdleak']
description = ('Decoy-state BB84 key rates under a passive light-source side '
               'channel: effective-error and quantum-coin bounds.')

setup(
    name='pyqkdleak',
    version=qkdleak.__version__,
    description=description,
    long_description=readme,
    author='qkdleak developers',
    packages=packages,
    install_requires=requires,
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['qkdleak = qkdleak.cli:main'],
    },
    license='Apache 2.0',
    zip_safe=False,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: 3.13',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
