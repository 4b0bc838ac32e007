"""Estimator-style front end.

``fit`` takes a knowledge base (object, text or path) and builds a reasoning
session; ``predict`` answers a batch of queries with a boolean array, and
``explain`` returns the full verdict for one query. Parameters follow the
scikit-learn conventions, so ``get_params``/``set_params``/``clone`` work.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .canonical import DEFAULT_MAX_ATOMS
from .entailment import QueryVerdict, Session, classical_verdict
from .kb import ModularKB
from .tableau import DEFAULT_NODE_LIMIT
from .validation import check_kb, check_mode, check_queries


class LexicographicReasoner(BaseEstimator):
    """Multi-concept lexicographic reasoner over a modular KB.

    Parameters
    ----------
    mode : {"mcl", "mclt", "module=<name>", "classical"}
        How ``predict`` decides queries.
    max_atoms : int
        Refuse canonical domains with more independent atoms than this.
    node_limit : int
        Tableau node budget per satisfiability call.
    """

    def __init__(self, mode: str = "mcl", max_atoms: int = DEFAULT_MAX_ATOMS, node_limit: int = DEFAULT_NODE_LIMIT):
        self.mode = mode
        self.max_atoms = max_atoms
        self.node_limit = node_limit

    def fit(self, kb, y=None, queries=None):
        """Build ranks, canonical domain and orders for ``kb``.

        ``queries`` pre-extends the signature so later ``predict`` calls on
        them need no rebuild.
        """
        self.kb_ = check_kb(kb)
        check_mode(self.mode, self.kb_)
        qs = check_queries(queries) if queries is not None else []
        self.session_ = Session(self.kb_, qs, max_atoms=self.max_atoms, node_limit=self.node_limit)
        self.ranks_ = self.session_.ranks
        self.domain_ = self.session_.domain
        self.n_types_ = len(self.domain_)
        return self

    def _session_for(self, q) -> Session:
        if self.session_.covers(q):
            return self.session_
        # the query brings new subconcepts: rebuild on the enlarged signature
        s = self.session_
        self.session_ = Session(
            self.kb_, s.queries + [q], max_atoms=self.max_atoms, tbox=s.tbox, ranks=s.ranks
        )
        self.domain_ = self.session_.domain
        self.n_types_ = len(self.domain_)
        return self.session_

    def explain(self, query) -> QueryVerdict:
        check_is_fitted(self, "session_")
        (q,) = check_queries([query])
        if self.mode == "classical":
            return classical_verdict(self.kb_, q, self.session_.tbox)
        return self._session_for(q).entails(q, self.mode)

    def predict(self, queries) -> np.ndarray:
        check_is_fitted(self, "session_")
        qs = check_queries(queries)
        if self.mode != "classical" and not all(self.session_.covers(q) for q in qs):
            s = self.session_
            self.session_ = Session(self.kb_, s.queries + qs, max_atoms=self.max_atoms, tbox=s.tbox, ranks=s.ranks)
            self.domain_ = self.session_.domain
            self.n_types_ = len(self.domain_)
        return np.array([self.explain(q).entailed for q in qs], dtype=bool)

    def score(self, queries, y) -> float:
        """Fraction of queries whose verdict matches ``y``."""
        return float(np.mean(self.predict(queries) == np.asarray(y, dtype=bool)))

    def rank(self, concept) -> float:
        check_is_fitted(self, "session_")
        from .parser import parse_concept

        c = parse_concept(concept) if isinstance(concept, str) else concept
        return self.ranks_.rank(c)


def fit_reasoner(kb: ModularKB | str, **params) -> LexicographicReasoner:
    return LexicographicReasoner(**params).fit(kb)
