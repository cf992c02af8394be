r"""
invlimits Tests
---------------

The tests are grouped by module. Each test module implements a number of
``check_*`` functions, which return ``True`` and are combined by a few
``test_*`` functions. Most checks compare the package against an
independent brute-force oracle on small instances: exhaustive rewriting
for word reduction, coherence filtering of all choice functions for
threads, and the shipped fixtures of :data:`invlimits.DATAPATH`.
All of them can be executed with py.test _`https://docs.pytest.org/en/latest/index.html`

If you want to run the tests locally you will need to install py.test
and hypothesis:

.. code-block:: bash
  pip install pytest pytest-depends hypothesis

Then run from the repository root:

.. code-block:: bash
  pytest invlimits/test

"""
