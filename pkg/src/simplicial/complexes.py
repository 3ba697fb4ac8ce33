"""Bundled triangulations: simplex boundaries, cones, the seven-vertex torus, sphere joins."""

from ..utils.errors import ContractError
from .triangulation import Triangulation, orient


def boundary_of_simplex(m: int) -> Triangulation:
    """
    Boundary of the m-simplex on vertices 0..m, facet i omitting vertex i with sign (-1)^i.

    Raises:
        ContractError: If m < 1
    """
    if m < 1:
        raise ContractError(f"boundary_of_simplex needs m >= 1, got {m}")
    vertices = tuple(range(m + 1))
    facets = [
        (vertices[:i] + vertices[i + 1 :], 1 if i % 2 == 0 else -1) for i in range(m + 1)
    ]
    return Triangulation(dim=m - 1, facets=facets)


def cone_over(t: Triangulation) -> Triangulation:
    return t.cone()


def torus7() -> Triangulation:
    """The seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    triangles = []
    for i in range(7):
        triangles.append((i, (i + 1) % 7, (i + 3) % 7))
        triangles.append((i, (i + 2) % 7, (i + 3) % 7))
    return orient(2, triangles)


def join_spheres(a: int = 2, b: int = 3) -> Triangulation:
    """Join of the boundaries of an a-simplex and a b-simplex: a sphere of dimension a+b-1."""
    return boundary_of_simplex(a).join(boundary_of_simplex(b))
