"""Right-handed trefoil: a three-crossing twist closed by two kinks."""
from lagrangian import Curve, build, dump, spline

TREFOIL = [
    (0, 2), (3, 2), (6, 2),
    (7, 1.6), (8, 0.6), (8.8, 0.9), (8.8, 1.8), (8, 2.0), (7.2, 1.1),
    (6, 1), (5, 0), (4, -1), (3, 0), (2, 1), (1, 0), (0, -1),
    (-0.8, -1.5),
    (0, -2), (3, -2), (6, -2),
    (7, -1.6), (8, -0.6), (8.8, -0.9), (8.8, -1.8), (8, -2.0), (7.2, -1.1),
    (6, -1), (5, 0), (4, 1), (3, 0), (2, -1), (1, 0), (0, 1),
    (-0.8, 1.5),
]

NAMES = [("a1", (1, 0)), ("a2", (3, 0)), ("a3", (5, 0)), ("a4", (7.4, 1.3)), ("a5", (7.4, -1.3))]


def trefoil(dx=0.0, dy=0.0):
    return Curve("L1", spline([(x + dx, y + dy) for x, y in TREFOIL]))


# self-crossing over/under by pass order along the parametrization
OVER = {"a1": "second", "a2": "first", "a3": "second", "a4": "first", "a5": "second"}

if __name__ == "__main__":
    doc, _ = build([trefoil()], NAMES, {"L1": 1}, over=OVER)
    dump(doc, "../diagrams/trefoil.json")
