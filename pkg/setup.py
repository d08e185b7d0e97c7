from os.path import abspath, dirname, join
try:
  # try to use setuptools
  from setuptools import setup
  setupArgs = dict(
      include_package_data=True,
      install_requires=["numpy",
                        "scipy>=1.7",
                        "shapely>=2",
                        "scikit-image",
                        "zope.interface",
                        "zope.schema",
                        "zope.i18nmessageid",
                        "decorator",
                        "setuptools", # to keep buildout happy
                        ],
      extras_require=dict(
        test=["hypothesis", "zope.testrunner"],
        ),
      entry_points=dict(
        console_scripts=["hypmetric = dm.hypmetric.cli:main"],
        ),
      namespace_packages=['dm'],
      zip_safe=False,
      )
except ImportError:
  # use distutils
  from distutils import setup
  setupArgs = dict(
    )

cd = abspath(dirname(__file__))
pd = join(cd, 'dm', 'hypmetric')

def pread(filename, base=pd): return open(join(base, filename)).read().rstrip()

setup(name='dm.hypmetric',
      version=pread('VERSION.txt').split('\n')[0],
      description="Hyperbolic type metrics (quasihyperbolic, distance ratio, Apollonian, Seittenranta) with metric ball tracing and verification suites",
      long_description=pread('README.txt'),
      classifiers=[
#        'Development Status :: 3 - Alpha',
        "Development Status :: 4 - Beta",
        'Intended Audience :: Science/Research',
        "License :: OSI Approved :: Zope Public License",
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
      packages=['dm', 'dm.hypmetric', 'dm.hypmetric.tests'],
      keywords='hyperbolic quasihyperbolic metric geometry',
      license='ZPL',
      **setupArgs
      )
