"""Published example interferometers, stored with their printed 6-digit values.

Rounding leaves X + iY unitary only to about 1e-6, so these schemes are built
with FIXTURE_TOL instead of the default tolerance.
"""

from typing import Dict, List, NamedTuple

from .sharing import SharingScheme
from .symplectic import PassiveInterferometer

FIXTURE_TOL = 1e-5


class Fixture(NamedTuple):
    n: int
    m: int
    X: List[List[float]]
    Y: List[List[float]]


FIXTURES: Dict[str, Fixture] = {
    "m1n2bad": Fixture(
        n=2,
        m=1,
        X=[
            [-0.293099, -0.803506, -0.311073],
            [0.128259, -0.376779, 0.463209],
            [-0.633935, -0.0662967, 0.145639],
        ],
        Y=[
            [0.0921935, 0.16507, 0.368724],
            [0.650109, -0.23828, -0.384196],
            [-0.254222, 0.352131, -0.619594],
        ],
    ),
    "m1n2good": Fixture(
        n=2,
        m=1,
        X=[
            [0.596667, 0.175214, 0.100266],
            [0.108915, 0.458534, -0.680759],
            [0.426961, -0.608681, -0.134113],
        ],
        Y=[
            [-0.0698255, 0.405573, 0.658688],
            [-0.457902, 0.174213, -0.272814],
            [-0.485058, -0.440131, 0.0151496],
        ],
    ),
    "m1n4": Fixture(
        n=4,
        m=1,
        X=[
            [0.300365, 0.29053, -0.291467, 0.497589, -0.0499837],
            [0.0193436, -0.0889674, -0.576899, 0.216171, -0.181089],
            [0.068743, -0.627185, 0.0456175, 0.267772, 0.488823],
            [0.313121, -0.292716, 0.202423, -0.254404, -0.472559],
            [0.591341, 0.0132897, -0.118776, -0.45464, 0.0190248],
        ],
        Y=[
            [0.312353, -0.285854, 0.469979, 0.285289, -0.0937025],
            [0.0839586, -0.117954, -0.320784, -0.442078, 0.509978],
            [0.445916, -0.00774418, -0.243163, 0.0854139, -0.15446],
            [0.382669, 0.26366, 0.163123, 0.252382, 0.425447],
            [-0.0840343, -0.513083, -0.339929, 0.121405, -0.16842],
        ],
    ),
    "m2n2": Fixture(
        n=2,
        m=2,
        X=[
            [-0.17138, 0.363352, 0.220969, 0.0345219],
            [0.158628, -0.268691, 0.342882, -0.0159773],
            [0.478503, -0.474253, -0.255255, 0.12308],
            [-0.435812, -0.0371908, 0.0669927, -0.343434],
        ],
        Y=[
            [-0.529669, -0.40525, 0.435797, 0.392287],
            [0.460908, 0.266619, 0.628541, 0.325934],
            [-0.130468, -0.312016, -0.235265, 0.544141],
            [-0.128694, 0.486635, -0.351609, 0.556099],
        ],
    ),
}


def get(name: str) -> Fixture:
    try:
        return FIXTURES[name.lower()]
    except KeyError:
        raise KeyError(f"Unrecognized fixture {name}")


def load_fixture(name: str) -> SharingScheme:
    fixture = get(name)
    interferometer = PassiveInterferometer(fixture.X, fixture.Y, tol=FIXTURE_TOL)
    return SharingScheme(fixture.n, fixture.m, interferometer)
