"""
Importing
---------
The `invlimits.api` submodule contains all API functions that are
available for Python. The CLI also relies on the API and therefore using the
API is the recommended way to use invlimits.

It is recommended to import the API like:

.. code-block:: python

    from invlimits import api

Functions
---------

Inputs are loaded by one of the ``load_*`` functions. Each of them accepts
a file name, the JSON content or an already parsed dictionary:

* :py:func:`load_directed_set`
* :py:func:`load_system`
* :py:func:`load_tree`
* :py:func:`load_finite_group_system`

Generated instances are built by:

* :py:func:`powerset`, :py:func:`chain`, :py:func:`symbolic_chain`
* :py:func:`restriction_system`, :py:func:`tree_system`
* :py:func:`full_binary_tree`, :py:func:`random_tree`
* :py:func:`induced_system`, :py:func:`build_model`

The names of all checks are prefixed with an *action* identifier:

* ``check_*`` and ``verify_*`` return a report and never raise on a
  negative verdict
* ``is_*`` return a boolean
* ``enumerate_*`` list all elements of a finite object

Everything else raises one of the exceptions of
:mod:`invlimits.util.exceptions` if an invariant does not hold.

"""
from .io import from_json, digest, file_kind
from .poset import (
    subset_id,
    powerset,
    chain,
    symbolic_chain,
    load_directed_set,
    is_directed,
    upper_bound,
    maximum_of,
    judge_transcript,
    play_bounded,
    player_one_bound_strategy,
    constant_strategy,
    sequence_strategy,
    random_strategy,
    all_sequence_strategies
)
from .words import (
    reduce_word,
    multiply,
    invert,
    syllable_length,
    map_generators,
    ab_add,
    ab_negate,
    ab_map_generators,
    parse_word,
    format_word,
    parse_vector,
    format_vector
)
from .system import (
    load_system,
    restriction_id,
    members_of,
    restriction_system,
    tree_system,
    load_tree,
    full_binary_tree,
    random_tree,
    levels_of,
    enumerate_threads,
    thread_from_branch,
    branch_from_thread,
    cofinal_branches,
    rank_of,
    height_of,
    check_good
)
from .grouplimit import (
    induced_system,
    parse_element,
    limit_element_eager,
    limit_element_lazy,
    basis_element,
    free_basis,
    multiply_limit,
    invert_limit,
    stabilization_point,
    decompose,
    recompose,
    freeness_certificate,
    length_growth_strategy,
    certify_free_limit
)
from .model import (
    load_finite_group_system,
    build_model,
    automorphisms,
    extract_coefficients,
    sigma_from_limit,
    is_automorphism,
    limit_families,
    verify_phi_isomorphism
)
