"""Tour of the blade basis and rotor rotations.

Prints the multiplication facts that fix the whole algebra, then rotates a
vector with a rotor and checks the result against a plain rotation matrix.
"""

import math

import numpy as np

from gatss import (
    BLADE_NAMES,
    E1,
    E2,
    E3,
    E12,
    E123,
    Multivector,
    gp,
    norm,
    reverse,
    rotor_axis_angle,
    sandwich,
    vector,
)


def show_generator_relations():
    print("generator relations")
    for e, name in ((E1, "e1"), (E2, "e2"), (E3, "e3")):
        print(f"  {name} {name} = {gp(e, e)}")
    print(f"  e1 e2 = {gp(E1, E2)}")
    print(f"  e2 e1 = {gp(E2, E1)}")
    print(f"  e1 e2 e3 = {gp(gp(E1, E2), E3)}")
    print(f"  e123 e123 = {gp(E123, E123)}")
    print()


def show_general_product():
    a = Multivector([1.0, 2.0, 0.0, -1.0, 0.0, 0.5, 0.0, 0.0])
    b = Multivector([0.0, 1.0, 1.0, 0.0, 0.0, 0.0, -2.0, 0.0])
    print("a           =", a)
    print("b           =", b)
    print("a b         =", gp(a, b))
    print("reverse(a)  =", reverse(a))
    print("norm(a)     =", f"{norm(a):.6f}")
    print()


def rotation_matrix(axis, angle):
    """Rodrigues rotation matrix, used only to double check the rotor."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    k = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def rotate_with_rotor():
    axis = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)
    angle = 2.0 * math.pi / 3.0
    r = rotor_axis_angle(vector(*axis), angle)
    print(f"rotor for a {math.degrees(angle):.0f} degree turn about {axis.round(4)}")
    print("  R =", r.mv)
    print("  R reverse(R) =", gp(r.mv, reverse(r.mv)))

    v = vector(1.0, 0.0, 0.0)
    rotated = sandwich(r, v)
    expected = rotation_matrix(axis, angle) @ np.array([1.0, 0.0, 0.0])
    got = np.array([rotated[1], rotated[2], rotated[3]])
    print("  R e1 reverse(R) =", rotated)
    print("  rotation matrix gives", expected.round(12))
    print(f"  max difference = {np.max(np.abs(got - expected)):.3e}")
    print()


def quarter_turn_table():
    r = rotor_axis_angle(E3, math.pi / 2.0)
    print("quarter turn about e3 sends")
    for v, name in ((E1, "e1"), (E2, "e2"), (E3, "e3")):
        print(f"  {name} -> {sandwich(r, v)}")
    print()


if __name__ == "__main__":
    print("blade basis order:", ", ".join(BLADE_NAMES))
    print()
    show_generator_relations()
    show_general_product()
    rotate_with_rotor()
    quarter_turn_table()
