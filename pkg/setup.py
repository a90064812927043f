import setuptools

with open("VERSION", 'r') as f:
    version = f.read().strip()

with open("README.md", 'r') as f:
    long_description = f.read()

with open("requirements.txt", 'r') as f:
    install_requires = [line.strip() for line in f if line.strip()]

setuptools.setup(
   name='hphi-embedding',
   version=version,
   description='Norms of embeddings between Gaussian-weighted spaces of entire functions.',
   package_dir={'': 'src'},
   packages=setuptools.find_packages(where='src'),
   install_requires=install_requires,
   extras_require={
       'test': ['pytest>=7.0', 'hypothesis>=6.0'],
   },
   entry_points={
       'console_scripts': [
           'hphi-embed=HPhiEmbedding.Cli.Commands:main',
       ],
   },
   license="MIT",
   long_description=long_description,
   long_description_content_type="text/markdown",
   include_package_data=True,
   python_requires='>=3.8',
)
