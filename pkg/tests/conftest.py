import math

import pytest

from litcompare.alignment import EmbeddingProvider
from litcompare.graph import GraphStore, Literal


@pytest.fixture
def store():
    return GraphStore()


def make_contribution(store, label, problem_label="some problem"):
    problem = store.create_resource(problem_label, {"ResearchProblem"})
    cid = store.create_resource(label, {"Contribution"})
    store.register_contribution(cid, [problem])
    return cid


@pytest.fixture
def vector_provider():
    """Hand-picked 3d vectors; cosines are known in closed form.

    population vs (population, total)-mean: cosine 0.96.
    alpha/beta/gamma: unit vectors in one plane with cos(alpha,beta)=0.95,
    cos(beta,gamma)=0.92 and cos(alpha,gamma)=cos(acos(.95)+acos(.92))<0.9.
    """
    theta_ab = math.acos(0.95)
    theta_bc = math.acos(0.92)
    theta_c = theta_ab + theta_bc
    return EmbeddingProvider(
        {
            "population": (1.0, 0.0, 0.0),
            "total": (0.92, 0.56, 0.0),
            "orthogonal": (0.0, 0.0, 1.0),
            "alpha": (1.0, 0.0, 0.0),
            "beta": (0.95, math.sin(theta_ab), 0.0),
            "gamma": (math.cos(theta_c), math.sin(theta_c), 0.0),
        }
    )


def add_literal_statement(store, subject, predicate_label, value):
    pid = store.create_predicate(predicate_label)
    return store.add_statement(subject, pid, Literal(value))
