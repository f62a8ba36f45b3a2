"""Frozen fixture values used by the test suite, with provenance tags.

Tags: "stated" marks externally fixed reference values the construction
must reproduce, "derived" marks values computed here by an independent
oracle and frozen, "trivial" marks direct consequences of definitions.
"""

from __future__ import annotations

from .serialize import SCHEMA_VERSION

RANK2_WORDS = {
    (0,): (-1, -2, 1, 2),
    (1,): (-2, -1, 1, 2),
    (-1,): (-1, -2, 2, 1),
}

# network Hamiltonians of the three rank-2 type A words, as label lists;
# family products are ordered top row first
RANK2_LABEL_HAMILTONIANS = {
    (0,): {
        1: [[(1, 1)], [(2, 2)], [(3, 3)], [(1, 2)], [(2, 3)]],
        2: [
            [(2, 2), (1, 1)],
            [(3, 3), (1, 1)],
            [(3, 3), (2, 2)],
            [(2, 3), (1, 1)],
            [(3, 3), (1, 2)],
        ],
    },
    (1,): {
        1: [[(1, 1)], [(2, 2)], [(3, 3)], [(1, 2)], [(2, 3)], [(1, 3)]],
        2: [
            [(2, 2), (1, 1)],
            [(3, 3), (1, 1)],
            [(3, 3), (2, 2)],
            [(2, 3), (1, 1)],
            [(3, 3), (1, 2)],
        ],
    },
    (-1,): {
        1: [[(1, 1)], [(2, 2)], [(3, 3)], [(1, 2)], [(2, 3)]],
        2: [
            [(2, 2), (1, 1)],
            [(3, 3), (1, 1)],
            [(3, 3), (2, 2)],
            [(2, 3), (1, 1)],
            [(3, 3), (1, 2)],
            [(2, 3), (1, 2)],
        ],
    },
}

# Lax Hamiltonians H_2, H_3 of the rank-3 chain for the padded index
# vectors, as plain products of generators (names refer to lax_context(3))
RANK3_LAX_LISTS = {
    (0, 0, 0): {
        2: [
            [("w_1", -1), ("w_2", 1), ("w_3", 1)],
            [("w_1", 1), ("w_2", -1), ("w_3", 1)],
            [("w_1", 1), ("w_2", 1), ("w_3", -1)],
            [("w_3", 1), ("D_1", 1), ("D_2", -1)],
            [("w_1", 1), ("D_2", 1), ("D_3", -1)],
        ],
        3: [
            [("w_1", 1), ("w_2", -1), ("w_3", -1)],
            [("w_1", -1), ("w_2", 1), ("w_3", -1)],
            [("w_1", -1), ("w_2", -1), ("w_3", 1)],
            [("w_3", -1), ("D_1", 1), ("D_2", -1)],
            [("w_1", -1), ("D_2", 1), ("D_3", -1)],
        ],
    },
    (0, 1, 0): {
        2: [
            [("w_1", -1), ("w_2", 1), ("w_3", 1)],
            [("w_1", 1), ("w_2", -1), ("w_3", 1)],
            [("w_1", 1), ("w_2", 1), ("w_3", -1)],
            [("w_2", -1), ("w_3", 1), ("D_1", 1), ("D_2", -1)],
            [("w_1", 1), ("w_2", -1), ("D_2", 1), ("D_3", -1)],
            [("w_2", -1), ("D_1", 1), ("D_3", -1)],
        ],
        3: [
            [("w_1", 1), ("w_2", -1), ("w_3", -1)],
            [("w_1", -1), ("w_2", 1), ("w_3", -1)],
            [("w_1", -1), ("w_2", -1), ("w_3", 1)],
            [("w_2", -1), ("w_3", -1), ("D_1", 1), ("D_2", -1)],
            [("w_1", -1), ("w_2", -1), ("D_2", 1), ("D_3", -1)],
        ],
    },
    (0, -1, 0): {
        2: [
            [("w_1", -1), ("w_2", 1), ("w_3", 1)],
            [("w_1", 1), ("w_2", -1), ("w_3", 1)],
            [("w_1", 1), ("w_2", 1), ("w_3", -1)],
            [("w_2", 1), ("w_3", 1), ("D_1", 1), ("D_2", -1)],
            [("w_1", 1), ("w_2", 1), ("D_2", 1), ("D_3", -1)],
        ],
        3: [
            [("w_1", 1), ("w_2", -1), ("w_3", -1)],
            [("w_1", -1), ("w_2", 1), ("w_3", -1)],
            [("w_1", -1), ("w_2", -1), ("w_3", 1)],
            [("w_2", 1), ("w_3", -1), ("D_1", 1), ("D_2", -1)],
            [("w_1", -1), ("w_2", 1), ("D_2", 1), ("D_3", -1)],
            [("w_2", 1), ("D_1", 1), ("D_3", -1)],
        ],
    },
}


def seed_manifest() -> dict:
    """Audit dump of every frozen fixture with its provenance tag."""
    return {
        "schema_version": SCHEMA_VERSION,
        "fixtures": [
            {
                "name": "rank2_words",
                "provenance": "stated",
                "value": {str(list(k)): list(v) for k, v in RANK2_WORDS.items()},
            },
            {
                "name": "rank2_label_hamiltonians",
                "provenance": "stated",
                "value": {
                    str(list(k)): {
                        str(i): [[list(l) for l in fam] for fam in fams]
                        for i, fams in v.items()
                    }
                    for k, v in RANK2_LABEL_HAMILTONIANS.items()
                },
            },
            {
                "name": "rank3_lax_lists",
                "provenance": "stated",
                "value": {
                    str(list(k)): {
                        str(i): [[list(t) for t in term] for term in terms]
                        for i, terms in v.items()
                    }
                    for k, v in RANK3_LAX_LISTS.items()
                },
            },
            {
                "name": "word_census",
                "provenance": "stated",
                "value": "3^(n-1) canonical words per rank",
            },
            {
                "name": "boundary_invariance",
                "provenance": "derived",
                "value": "fails as an algebra identity; see the acceptance suite",
            },
        ],
    }
