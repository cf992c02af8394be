from setuptools import setup, find_packages


def requirements():
    with open('requirements.txt') as f:
        return [line for line in f.read().split('\n') if line.strip()]


def version():
    with open('invlimits/__version__.py') as f:
        c = f.read()

    d = dict()
    exec(c, d, d)
    return d['__version__']


def readme():
    with open('README.md') as f:
        return f.read()


setup(
    name="invlimits",
    license="GPL v3",
    install_requires=requirements(),
    extras_require={
        'test': ['pytest', 'pytest-depends', 'hypothesis']
    },
    version=version(),
    description="Workbench for inverse systems over directed sets and their inverse limits.",
    long_description=readme(),
    long_description_content_type="text/markdown",
    packages=find_packages(),
    package_data={'invlimits': ['data/*.json']},
    entry_points={
        'console_scripts': [
            'invlimits = invlimits.command_line:main'
        ]
    },
    include_package_data=True,
    zip_safe=False
)
