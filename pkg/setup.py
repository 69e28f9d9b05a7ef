from setuptools import setup

namespace = {}
with open("qfcre/version.py", "r") as f:
    exec(f.read(), namespace)

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

with open("requirements.txt", "r") as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith("#")]

setup(
    name='qfcre',
    version=namespace["__version__"],
    description='Quantile-based fractional cumulative residual entropy in Python.',
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='MIT License',
    packages=['qfcre'],
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.0"]},
    entry_points={"console_scripts": ["qfcre = qfcre.cli:main"]},
    python_requires='>=3.8'
)
