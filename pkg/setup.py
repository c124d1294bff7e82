from setuptools import setup

with open("README.rst") as f:
    long_description = f.read()

setup(
 name="bidisk",
 version="0.1.0",
 description="Denjoy-Wolff points of holomorphic self-maps of the bidisk.",
 long_description=long_description,
 long_description_content_type="text/x-rst",
 author="Sam Ireland",
 author_email="mail@samireland.com",
 license="MIT",
 classifiers=[
  "Development Status :: 3 - Alpha",
  "Intended Audience :: Science/Research",
  "License :: OSI Approved :: MIT License",
  "Topic :: Scientific/Engineering :: Mathematics",
  "Programming Language :: Python :: 3",
  "Programming Language :: Python :: 3.7",
  "Programming Language :: Python :: 3.8",
 ],
 keywords="complex dynamics bidisk Denjoy-Wolff Julia horosphere iteration",
 packages=["bidisk"],
 python_requires=">=3.7",
 install_requires=["numpy", "scipy>=1.7", "requests"],
 entry_points={"console_scripts": ["bidisk=bidisk.cli:main"]}
)
